// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#include "colortiger/estimators.hpp"

#include "colortiger/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace colortiger {

namespace {

void require_valid_pixels(const LinearImage& img)
{
    if (img.valid_count() == 0)
        throw Error(ErrorCode::NoValidPixels, "image has no valid pixels");
}

// Exponentiation by squaring; shared by every SoG entry point so that a
// sweep and a single call agree bit for bit.
double ipow(double x, int p)
{
    double result = 1.0;
    while (p > 0) {
        if (p & 1)
            result *= x;
        x *= x;
        p >>= 1;
    }
    return result;
}

Rgb channel_max(const LinearImage& img)
{
    Rgb m;
    for (std::size_t i = 0; i < img.size(); ++i) {
        if (!img.valid(i))
            continue;
        const Rgb& px = img.pixel(i);
        m.r = std::max(m.r, px.r);
        m.g = std::max(m.g, px.g);
        m.b = std::max(m.b, px.b);
    }
    return m;
}

} // namespace

Illuminant gray_world(const LinearImage& img)
{
    require_valid_pixels(img);
    Rgb sum;
    std::size_t count = 0;
    for (std::size_t i = 0; i < img.size(); ++i) {
        if (img.valid(i)) {
            sum = sum + img.pixel(i);
            ++count;
        }
    }
    return normalize(sum * (1.0 / static_cast<double>(count)));
}

Illuminant white_patch(const LinearImage& img)
{
    require_valid_pixels(img);
    return normalize(channel_max(img));
}

Illuminant shades_of_gray(const LinearImage& img, int p)
{
    if (p < 1)
        throw Error(ErrorCode::InvalidConfig, "Minkowski power must be >= 1, got " + std::to_string(p));
    require_valid_pixels(img);

    const Rgb m = channel_max(img);
    Rgb inv_m;
    for (std::size_t c = 0; c < 3; ++c)
        inv_m[c] = m[c] > 0.0 ? 1.0 / m[c] : 0.0;

    Rgb acc;
    std::size_t count = 0;
    for (std::size_t i = 0; i < img.size(); ++i) {
        if (!img.valid(i))
            continue;
        const Rgb& px = img.pixel(i);
        for (std::size_t c = 0; c < 3; ++c)
            acc[c] += ipow(px[c] * inv_m[c], p);
        ++count;
    }

    Rgb e;
    const double inv_count = 1.0 / static_cast<double>(count);
    for (std::size_t c = 0; c < 3; ++c) {
        if (m[c] > 0.0)
            e[c] = m[c] * std::pow(acc[c] * inv_count, 1.0 / static_cast<double>(p));
    }
    return normalize(e);
}

std::vector<Illuminant> sog_sweep(const LinearImage& img, const SogSweepConfig& cfg)
{
    if (cfg.n < 1)
        throw Error(ErrorCode::InvalidConfig, "sweep upper power must be >= 1");
    std::vector<Illuminant> out;
    out.reserve(static_cast<std::size_t>(cfg.n));
    for (int p = 1; p <= cfg.n; ++p)
        out.push_back(shades_of_gray(img, p));
    return out;
}

} // namespace colortiger
