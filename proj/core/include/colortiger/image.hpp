// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#pragma once

#include "colortiger/color.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace colortiger {

/// Row-major grid of linear (black-level subtracted) RGB pixels with a
/// per-pixel validity mask. Saturated and masked-out pixels are invalid.
class LinearImage {
public:
    /// All pixels zero and valid.
    LinearImage(std::size_t width, std::size_t height);
    /// `valid` may be empty, meaning every pixel is valid.
    LinearImage(std::size_t width, std::size_t height, std::vector<Rgb> pixels,
                std::vector<std::uint8_t> valid = {});

    std::size_t width() const { return width_; }
    std::size_t height() const { return height_; }
    std::size_t size() const { return pixels_.size(); }

    const Rgb& pixel(std::size_t i) const { return pixels_[i]; }
    const Rgb& pixel(std::size_t x, std::size_t y) const { return pixels_[y * width_ + x]; }
    void set_pixel(std::size_t i, const Rgb& value);

    bool valid(std::size_t i) const { return valid_[i] != 0; }
    void set_valid(std::size_t i, bool v) { valid_[i] = v ? 1 : 0; }
    std::size_t valid_count() const;

    std::span<const Rgb> pixels() const { return pixels_; }
    std::span<const std::uint8_t> mask() const { return valid_; }

    /// Multiplies every pixel by `s` (s >= 0).
    LinearImage scaled(double s) const;

private:
    std::size_t width_;
    std::size_t height_;
    std::vector<Rgb> pixels_;
    std::vector<std::uint8_t> valid_;
};

/// von Kries correction: every valid pixel is divided channel-wise by `e`
/// rescaled so that its green divisor is 1. Invalid pixels pass through.
/// Throws ZeroChannel if any channel of `e` is zero.
LinearImage apply_white_balance(const LinearImage& img, const Illuminant& e);

} // namespace colortiger
