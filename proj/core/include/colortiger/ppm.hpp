// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

namespace colortiger {

/// Integer RGB samples as stored on disk, interleaved row-major.
struct RawImage {
    std::size_t width = 0;
    std::size_t height = 0;
    std::uint16_t maxval = 65535;
    std::vector<std::uint16_t> samples; ///< 3 * width * height

    std::uint16_t at(std::size_t pixel, std::size_t channel) const { return samples[pixel * 3 + channel]; }
};

/// Binary P6 reader. maxval < 256 uses one byte per sample, otherwise two
/// big-endian bytes. Throws ParseError / Io.
RawImage read_ppm(std::istream& in);
RawImage read_ppm(const std::filesystem::path& path);

/// Binary P6 writer; samples are written with two big-endian bytes when
/// maxval > 255.
void write_ppm(std::ostream& out, const RawImage& img);
void write_ppm(const std::filesystem::path& path, const RawImage& img);

} // namespace colortiger
