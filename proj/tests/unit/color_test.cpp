// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#include "helpers.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace colortiger;
using colortiger::testing::expect_code;
using colortiger::testing::random_direction;
using colortiger::testing::random_image;
using colortiger::testing::reference_angle;

TEST(Normalize, Examples)
{
    const Illuminant a = normalize({2, 4, 6});
    EXPECT_NEAR(a.r(), 0.2673, 5e-5);
    EXPECT_NEAR(a.g(), 0.5345, 5e-5);
    EXPECT_NEAR(a.b(), 0.8018, 5e-5);
    const Illuminant w = normalize({1, 1, 1});
    for (int c = 0; c < 3; ++c)
        EXPECT_NEAR(w[c], 1.0 / std::sqrt(3.0), 1e-15);
    expect_code(ErrorCode::ZeroVector, [] { normalize({0, 0, 0}); });
    expect_code(ErrorCode::InvalidVector, [] { normalize({1, -1, 0}); });
    expect_code(ErrorCode::InvalidVector, [] { normalize({NAN, 1, 0}); });
}

TEST(Normalize, UnitNormAndIdempotent)
{
    Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        const Rgb v = random_direction(rng) * std::pow(10.0, 6.0 * rng.uniform() - 3.0);
        const Illuminant n = normalize(v);
        EXPECT_NEAR(norm(n.rgb()), 1.0, 1e-12);
        const Illuminant twice = normalize(n.rgb());
        EXPECT_LT(angular_distance(n, twice), 1e-9);
        EXPECT_NEAR(norm(twice.rgb()), 1.0, 1e-12);
    }
}

TEST(AngularDistance, Examples)
{
    EXPECT_NEAR(angular_distance(normalize({1, 2, 3}), normalize({2, 4, 6})), 0.0, 1e-12);
    EXPECT_NEAR(angular_distance(normalize({1, 0, 0}), normalize({0, 1, 0})), 90.0, 1e-12);
    EXPECT_NEAR(angular_distance(normalize({1, 1, 0}), normalize({1, 0, 0})), 45.0, 1e-12);
    expect_code(ErrorCode::InvalidVector, [] { angular_distance(Rgb{1, 0, 0}, Rgb{-1, 0, 0}); });
    expect_code(ErrorCode::ZeroVector, [] { angular_distance(Rgb{0, 0, 0}, Rgb{1, 0, 0}); });
}

TEST(AngularDistance, MatchesHighPrecisionReference)
{
    Rng rng(12);
    for (int i = 0; i < 2000; ++i) {
        const Rgb a = random_direction(rng);
        Rgb b = random_direction(rng);
        if (i % 2 == 0)
            b = a + Rgb{1e-7 * rng.uniform(), 0.0, 1e-7 * rng.uniform()};
        EXPECT_NEAR(angular_distance(a, b), reference_angle(a, b), 1e-11);
    }
}

TEST(AngularDistance, SymmetricAndScaleInvariant)
{
    Rng rng(13);
    for (int i = 0; i < 1000; ++i) {
        const Rgb a = random_direction(rng);
        const Rgb b = random_direction(rng);
        const double s = std::pow(10.0, 8.0 * rng.uniform() - 4.0);
        const double ab = angular_distance(a, b);
        EXPECT_EQ(ab, angular_distance(b, a));
        EXPECT_NEAR(angular_distance(a * s, b), ab, 1e-9);
        EXPECT_GE(ab, 0.0);
        EXPECT_LE(ab, 180.0);
        EXPECT_EQ(angular_distance(a, a * s) < 1e-9, true);
    }
}

TEST(RbChromaticity, Examples)
{
    const auto w = rb_chromaticity(Rgb{1, 1, 1});
    EXPECT_NEAR(w.r, 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(w.b, 1.0 / 3.0, 1e-15);
    const auto red = rb_chromaticity(Rgb{2, 1, 1});
    EXPECT_DOUBLE_EQ(red.r, 0.5);
    EXPECT_DOUBLE_EQ(red.b, 0.25);
    const auto green = rb_chromaticity(Rgb{0, 1, 0});
    EXPECT_EQ(green.r, 0.0);
    EXPECT_EQ(green.b, 0.0);
    expect_code(ErrorCode::ZeroVector, [] { rb_chromaticity(Rgb{0, 0, 0}); });
}

TEST(RbChromaticity, ScaleInvariantAndInSimplex)
{
    Rng rng(14);
    for (int i = 0; i < 500; ++i) {
        const Rgb v = random_direction(rng);
        const double s = 0.001 + 1000.0 * rng.uniform();
        const auto a = rb_chromaticity(v);
        const auto b = rb_chromaticity(v * s);
        EXPECT_NEAR(a.r, b.r, 1e-14);
        EXPECT_NEAR(a.b, b.b, 1e-14);
        EXPECT_GE(a.r, 0.0);
        EXPECT_GE(a.b, 0.0);
        EXPECT_LE(a.r + a.b, 1.0);
    }
}

TEST(WhiteBalance, PixelsEqualToIlluminantBecomeAchromatic)
{
    const Illuminant e = normalize({0.7, 0.5, 0.3});
    LinearImage img(4, 2);
    for (std::size_t i = 0; i < img.size(); ++i)
        img.set_pixel(i, e.rgb() * (1.0 + static_cast<double>(i)));
    const LinearImage out = apply_white_balance(img, e);
    for (std::size_t i = 0; i < out.size(); ++i) {
        EXPECT_NEAR(out.pixel(i).r, out.pixel(i).g, 1e-12);
        EXPECT_NEAR(out.pixel(i).b, out.pixel(i).g, 1e-12);
    }
}

TEST(WhiteBalance, IdentityIlluminantLeavesImage)
{
    Rng rng(15);
    const LinearImage img = random_image(rng, 8, 8);
    const LinearImage out = apply_white_balance(img, normalize({1, 1, 1}));
    for (std::size_t i = 0; i < img.size(); ++i)
        for (int c = 0; c < 3; ++c)
            EXPECT_DOUBLE_EQ(out.pixel(i)[c], img.pixel(i)[c]);
}

TEST(WhiteBalance, GreenDivisorIsOneAndInvalidPixelsPassThrough)
{
    LinearImage img(2, 1, {Rgb{2, 3, 4}, Rgb{5, 6, 7}});
    img.set_valid(1, false);
    const Illuminant e = normalize({2, 1, 4});
    const LinearImage out = apply_white_balance(img, e);
    EXPECT_NEAR(out.pixel(0).r, 1.0, 1e-12);
    EXPECT_NEAR(out.pixel(0).g, 3.0, 1e-12);
    EXPECT_NEAR(out.pixel(0).b, 1.0, 1e-12);
    EXPECT_EQ(out.pixel(1), (Rgb{5, 6, 7}));
    EXPECT_FALSE(out.valid(1));
}

TEST(WhiteBalance, RoundTripWithInverse)
{
    Rng rng(16);
    const LinearImage img = random_image(rng, 16, 16);
    const Illuminant e = normalize({0.8, 0.5, 0.35});
    const Illuminant inv = normalize({1.0 / e.r(), 1.0 / e.g(), 1.0 / e.b()});
    const LinearImage back = apply_white_balance(apply_white_balance(img, e), inv);
    for (std::size_t i = 0; i < img.size(); ++i)
        for (int c = 0; c < 3; ++c)
            EXPECT_NEAR(back.pixel(i)[c], img.pixel(i)[c], 1e-9 * img.pixel(i)[c]);
}

TEST(WhiteBalance, ZeroChannelRejected)
{
    const LinearImage img(1, 1, {Rgb{1, 1, 1}});
    expect_code(ErrorCode::ZeroChannel, [&] { apply_white_balance(img, normalize({1, 0, 1})); });
}

TEST(LinearImage, Validation)
{
    expect_code(ErrorCode::EmptyImage, [] { LinearImage(0, 3); });
    expect_code(ErrorCode::LengthMismatch, [] { LinearImage(2, 2, std::vector<Rgb>(3)); });
    expect_code(ErrorCode::InvalidVector, [] { LinearImage(1, 1, {Rgb{-1, 0, 0}}); });
    const LinearImage img(3, 2);
    EXPECT_EQ(img.valid_count(), 6u);
}

TEST(Errors, CategoriesMapToExitClasses)
{
    EXPECT_EQ(category_of(ErrorCode::InvalidConfig), ErrorCategory::Usage);
    EXPECT_EQ(category_of(ErrorCode::ZeroVector), ErrorCategory::Numerical);
    EXPECT_EQ(category_of(ErrorCode::DegenerateInput), ErrorCategory::Numerical);
    EXPECT_EQ(category_of(ErrorCode::ParseError), ErrorCategory::Data);
    EXPECT_EQ(category_of(ErrorCode::MissingImage), ErrorCategory::Data);
}
