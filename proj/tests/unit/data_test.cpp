// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#include "helpers.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

using namespace colortiger;
using colortiger::testing::expect_code;
using colortiger::testing::scratch_dir;

namespace fs = std::filesystem;

namespace {

RawImage raw_constant(std::size_t w, std::size_t h, std::uint16_t v)
{
    RawImage raw;
    raw.width = w;
    raw.height = h;
    raw.samples.assign(w * h * 3, v);
    return raw;
}

void write_text(const fs::path& p, const std::string& text)
{
    std::ofstream out(p, std::ios::binary);
    out << text;
}

DatasetManifest parse(const std::string& text)
{
    std::istringstream in(text);
    return parse_manifest(in, "/data", false);
}

} // namespace

TEST(Ppm, RoundTripSixteenBit)
{
    Rng rng(81);
    RawImage raw;
    raw.width = 7;
    raw.height = 3;
    for (std::size_t i = 0; i < 63; ++i)
        raw.samples.push_back(static_cast<std::uint16_t>(rng.index(65536)));
    std::ostringstream out;
    write_ppm(out, raw);
    const std::string bytes = out.str();
    EXPECT_EQ(bytes.substr(0, 13), "P6\n7 3\n65535\n");
    EXPECT_EQ(bytes.size(), 13 + 63 * 2u);
    // Big-endian samples.
    EXPECT_EQ(static_cast<unsigned char>(bytes[13]), raw.samples[0] >> 8);
    EXPECT_EQ(static_cast<unsigned char>(bytes[14]), raw.samples[0] & 0xff);
    std::istringstream in(bytes);
    const RawImage back = read_ppm(in);
    EXPECT_EQ(back.width, 7u);
    EXPECT_EQ(back.height, 3u);
    EXPECT_EQ(back.samples, raw.samples);
}

TEST(Ppm, CommentsAndEightBit)
{
    std::string bytes = "P6\n# made by hand\n2 1\n255\n";
    bytes += std::string{'\x01', '\x02', '\x03', '\xff', '\x00', '\x10'};
    std::istringstream in(bytes);
    const RawImage img = read_ppm(in);
    EXPECT_EQ(img.maxval, 255);
    EXPECT_EQ(img.samples, (std::vector<std::uint16_t>{1, 2, 3, 255, 0, 16}));
}

TEST(Ppm, Malformed)
{
    for (const std::string bad : {std::string("P3\n1 1\n255\n1 2 3"), std::string("P6\n1 1\n65535\n\x01"),
                                  std::string("P6\n0 1\n255\n"), std::string("P6\n1 1\n70000\n"),
                                  std::string("")}) {
        std::istringstream in(bad);
        expect_code(ErrorCode::ParseError, [&] { read_ppm(in); });
    }
    expect_code(ErrorCode::Io, [] { read_ppm(fs::path("/nonexistent/x.ppm")); });
}

TEST(Preprocess, CubeBlackLevel)
{
    RawImage raw = raw_constant(4, 4, 2048);
    raw.samples[0] = 3000;
    raw.samples[3] = 1000;
    const LinearImage img = preprocess(raw, cube_profile());
    EXPECT_EQ(img.pixel(1).r, 0.0);
    EXPECT_EQ(img.pixel(0).r, 952.0);
    EXPECT_EQ(img.pixel(2).g, 0.0);
}

TEST(Preprocess, CubeSaturationUsesRawValues)
{
    RawImage raw = raw_constant(3, 1, 5000);
    raw.samples[0] = 16383;
    raw.samples[4] = 16381;
    raw.samples[8] = 16380;
    const LinearImage img = preprocess(raw, cube_profile());
    EXPECT_FALSE(img.valid(0));
    EXPECT_FALSE(img.valid(1));
    EXPECT_TRUE(img.valid(2));
}

TEST(Preprocess, CubeCalibrationMask)
{
    RawImage raw = raw_constant(2200, 1300, 4000);
    // One clipped pixel sets the saturation level above the rest.
    raw.samples[0] = raw.samples[1] = raw.samples[2] = 16383;
    const LinearImage img = preprocess(raw, cube_profile());
    auto at = [&](std::size_t row, std::size_t col) { return img.valid(row * 2200 + col); };
    EXPECT_FALSE(at(1200, 2100));
    EXPECT_FALSE(at(1050, 2050));
    EXPECT_TRUE(at(1049, 2100));
    EXPECT_TRUE(at(1200, 2049));
    EXPECT_FALSE(at(0, 0));
    EXPECT_TRUE(at(0, 1));
    EXPECT_EQ(img.valid_count(), 2200u * 1300u - 250u * 150u - 1u);
}

TEST(Preprocess, NeverRaisesValuesOrUnmasks)
{
    Rng rng(82);
    RawImage raw;
    raw.width = 40;
    raw.height = 40;
    for (std::size_t i = 0; i < 4800; ++i)
        raw.samples.push_back(static_cast<std::uint16_t>(rng.index(16384)));
    PreprocessProfile p = cube_profile();
    p.mask_row = 20;
    p.mask_col = 30;
    const LinearImage img = preprocess(raw, p);
    for (std::size_t i = 0; i < img.size(); ++i) {
        for (std::size_t c = 0; c < 3; ++c)
            EXPECT_LE(img.pixel(i)[c], raw.at(i, c));
        if (i / 40 >= 20 && i % 40 >= 30)
            EXPECT_FALSE(img.valid(i));
    }
}

TEST(Preprocess, LinearProfileKeepsEverything)
{
    const RawImage raw = raw_constant(2, 2, 65535);
    const LinearImage img = preprocess(raw, linear_profile());
    EXPECT_EQ(img.valid_count(), 4u);
    EXPECT_EQ(img.pixel(3).b, 65535.0);
}

TEST(Preprocess, Errors)
{
    expect_code(ErrorCode::EmptyImage, [] { preprocess(RawImage{}, cube_profile()); });
    expect_code(ErrorCode::AllPixelsInvalid, [] { preprocess(raw_constant(3, 3, 9000), cube_profile()); });
    expect_code(ErrorCode::InvalidConfig, [] { profile_by_name("nikon"); });
}

TEST(Manifest, ParsesEntriesAndResolvesPaths)
{
    const DatasetManifest m = parse("path,r,g,b\na.ppm,1,2,3\nsub/b.ppm,0.5,0.5,0.5\n/abs/c.ppm,3,2,1\n");
    ASSERT_EQ(m.size(), 3u);
    EXPECT_EQ(m.entries[0].image_path, fs::path("/data/a.ppm"));
    EXPECT_EQ(m.entries[1].image_path, fs::path("/data/sub/b.ppm"));
    EXPECT_EQ(m.entries[2].image_path, fs::path("/abs/c.ppm"));
    EXPECT_LT(angular_distance(m.entries[0].ground_truth, normalize({1, 2, 3})), 1e-12);
    EXPECT_EQ(m.profile, "linear");
    EXPECT_FALSE(m.entries[0].second_ground_truth);
}

TEST(Manifest, ProfileLineAndSecondTruth)
{
    const DatasetManifest m =
        parse("# profile=cube\npath,r,g,b,r2,g2,b2\r\na.ppm,1,2,3,3,2,1\r\nb.ppm,1,1,1,,,\r\n");
    EXPECT_EQ(m.profile, "cube");
    ASSERT_TRUE(m.entries[0].second_ground_truth);
    EXPECT_LT(angular_distance(*m.entries[0].second_ground_truth, normalize({3, 2, 1})), 1e-12);
    EXPECT_FALSE(m.entries[1].second_ground_truth);
}

TEST(Manifest, ErrorsCarryLineNumbers)
{
    try {
        parse("path,r,g,b\na.ppm,1,2,3\nb.ppm,1,x,3\n");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ParseError);
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
    expect_code(ErrorCode::InvalidGroundTruth, [] { parse("path,r,g,b\na.ppm,0,0,0\n"); });
    expect_code(ErrorCode::InvalidGroundTruth, [] { parse("path,r,g,b\na.ppm,-1,1,1\n"); });
    expect_code(ErrorCode::ParseError, [] { parse("file,r,g,b\na.ppm,1,1,1\n"); });
    expect_code(ErrorCode::ParseError, [] { parse("path,r,g,b\na.ppm,1,1\n"); });
    expect_code(ErrorCode::ParseError, [] { parse("path,r,g,b\na.ppm,1,1,1\n./a.ppm,1,1,1\n"); });
    expect_code(ErrorCode::EmptyInput, [] { parse("path,r,g,b\n"); });
    expect_code(ErrorCode::InvalidConfig, [] { parse("# profile=foo\npath,r,g,b\na.ppm,1,1,1\n"); });
}

TEST(Manifest, MissingImageAndRoundTrip)
{
    const fs::path dir = scratch_dir("manifest");
    write_text(dir / "m.csv", "path,r,g,b\nx.ppm,1,1,1\n");
    expect_code(ErrorCode::MissingImage, [&] { load_manifest(dir / "m.csv"); });

    std::ofstream(dir / "x.ppm") << "";
    std::ofstream(dir / "y.ppm") << "";
    write_text(dir / "m.csv", "# profile=cube\npath,r,g,b\nx.ppm,1,2,3\ny.ppm,0.3,0.2,0.1\n");
    const DatasetManifest m = load_manifest(dir / "m.csv");
    save_manifest(dir / "copy.csv", m);
    const DatasetManifest back = load_manifest(dir / "copy.csv");
    ASSERT_EQ(back.size(), 2u);
    EXPECT_EQ(back.profile, "cube");
    for (std::size_t i = 0; i < 2; ++i) {
        EXPECT_EQ(back.entries[i].image_path, m.entries[i].image_path);
        EXPECT_EQ(back.entries[i].ground_truth, m.entries[i].ground_truth);
    }
}

TEST(Manifest, LoadImagesReportsMissingFiles)
{
    const fs::path dir = scratch_dir("load_images");
    RawImage raw = raw_constant(2, 2, 1000);
    write_ppm(dir / "a.ppm", raw);
    write_text(dir / "m.csv", "path,r,g,b\na.ppm,1,1,1\n");
    const DatasetManifest m = load_manifest(dir / "m.csv");
    EXPECT_EQ(load_images(m).size(), 1u);
    fs::remove(dir / "a.ppm");
    expect_code(ErrorCode::MissingImage, [&] { load_images(m); });
}

TEST(KFold, EqualFoldsWhenDivisible)
{
    const auto folds = kfold(9, 3, 1);
    ASSERT_EQ(folds.size(), 3u);
    for (const auto& f : folds)
        EXPECT_EQ(f.size(), 3u);
    const auto big = kfold(1707, 3, 5);
    for (const auto& f : big)
        EXPECT_EQ(f.size(), 569u);
}

TEST(KFold, PartitionForAllSizes)
{
    for (std::size_t n = 2; n < 40; ++n) {
        for (std::size_t k = 2; k <= std::min<std::size_t>(n, 7); ++k) {
            const auto folds = kfold(n, k, n * 31 + k);
            std::vector<int> seen(n, 0);
            std::size_t lo = n, hi = 0;
            for (const auto& f : folds) {
                lo = std::min(lo, f.size());
                hi = std::max(hi, f.size());
                EXPECT_TRUE(std::is_sorted(f.begin(), f.end()));
                for (std::size_t i : f)
                    ++seen[i];
            }
            EXPECT_LE(hi - lo, 1u);
            for (int s : seen)
                EXPECT_EQ(s, 1);
        }
    }
}

TEST(KFold, DeterministicPerSeed)
{
    EXPECT_EQ(kfold(50, 3, 7), kfold(50, 3, 7));
    EXPECT_NE(kfold(50, 3, 7), kfold(50, 3, 8));
}

TEST(KFold, Errors)
{
    expect_code(ErrorCode::TooFewEntries, [] { kfold(2, 3, 0); });
    expect_code(ErrorCode::InvalidConfig, [] { kfold(10, 1, 0); });
}
