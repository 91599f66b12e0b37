// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#pragma once

#include "colortiger/colortiger.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace colortiger::testing {

inline LinearImage random_image(Rng& rng, std::size_t width, std::size_t height, Rgb tint = {1.0, 1.0, 1.0})
{
    std::vector<Rgb> px(width * height);
    for (auto& p : px)
        p = hadamard(tint, Rgb{rng.uniform_open_closed(), rng.uniform_open_closed(), rng.uniform_open_closed()});
    return LinearImage(width, height, std::move(px));
}

inline Rgb random_direction(Rng& rng)
{
    return Rgb{0.05 + rng.uniform(), 0.05 + rng.uniform(), 0.05 + rng.uniform()};
}

inline Illuminant random_illuminant(Rng& rng)
{
    return normalize(random_direction(rng));
}

/// Naive reference for the angle between two vectors, long double arithmetic.
inline double reference_angle(const Rgb& a, const Rgb& b)
{
    const long double ax = a.r, ay = a.g, az = a.b, bx = b.r, by = b.g, bz = b.b;
    const long double cx = ay * bz - az * by, cy = az * bx - ax * bz, cz = ax * by - ay * bx;
    const long double s = std::sqrt(cx * cx + cy * cy + cz * cz);
    const long double c = ax * bx + ay * by + az * bz;
    return static_cast<double>(std::atan2(s, c) * 180.0L / 3.14159265358979323846264338327950288L);
}

/// Fresh scratch directory under the test working directory.
inline std::filesystem::path scratch_dir(const std::string& name)
{
    // Keyed by test so that parallel ctest processes never share a directory.
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    const std::string owner = info ? std::string(info->test_suite_name()) + "." + info->name() : "global";
    const auto dir = std::filesystem::current_path() / "scratch" / owner / name;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

/// Runs `fn` and checks that it throws an Error with `code`.
template <typename Fn>
void expect_code(ErrorCode code, Fn&& fn)
{
    try {
        fn();
        ADD_FAILURE() << "expected " << to_string(code);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

} // namespace colortiger::testing
