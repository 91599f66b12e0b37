// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#include "colortiger/image.hpp"

#include "colortiger/error.hpp"

#include <algorithm>
#include <cmath>

namespace colortiger {

namespace {

void check_pixel(const Rgb& p)
{
    for (std::size_t c = 0; c < 3; ++c) {
        if (!std::isfinite(p[c]) || p[c] < 0.0)
            throw Error(ErrorCode::InvalidVector, "pixel channels must be finite and non-negative");
    }
}

} // namespace

LinearImage::LinearImage(std::size_t width, std::size_t height)
    : width_(width), height_(height), pixels_(width * height), valid_(width * height, 1)
{
    if (width == 0 || height == 0)
        throw Error(ErrorCode::EmptyImage, "image has zero area");
}

LinearImage::LinearImage(std::size_t width, std::size_t height, std::vector<Rgb> pixels,
                         std::vector<std::uint8_t> valid)
    : width_(width), height_(height), pixels_(std::move(pixels)), valid_(std::move(valid))
{
    if (width == 0 || height == 0)
        throw Error(ErrorCode::EmptyImage, "image has zero area");
    if (pixels_.size() != width * height)
        throw Error(ErrorCode::LengthMismatch, "pixel count does not match width * height");
    if (valid_.empty())
        valid_.assign(pixels_.size(), 1);
    if (valid_.size() != pixels_.size())
        throw Error(ErrorCode::LengthMismatch, "mask size does not match pixel count");
    std::for_each(pixels_.begin(), pixels_.end(), check_pixel);
}

void LinearImage::set_pixel(std::size_t i, const Rgb& value)
{
    check_pixel(value);
    pixels_[i] = value;
}

std::size_t LinearImage::valid_count() const
{
    return static_cast<std::size_t>(std::count(valid_.begin(), valid_.end(), std::uint8_t{1}));
}

LinearImage LinearImage::scaled(double s) const
{
    LinearImage out = *this;
    for (auto& p : out.pixels_)
        p = p * s;
    return out;
}

LinearImage apply_white_balance(const LinearImage& img, const Illuminant& e)
{
    if (e.r() == 0.0 || e.g() == 0.0 || e.b() == 0.0)
        throw Error(ErrorCode::ZeroChannel, "white balance illuminant has a zero channel");
    const Rgb divisor{e.r() / e.g(), 1.0, e.b() / e.g()};

    LinearImage out = img;
    for (std::size_t i = 0; i < img.size(); ++i) {
        if (img.valid(i))
            out.set_pixel(i, divide(img.pixel(i), divisor));
    }
    return out;
}

} // namespace colortiger
