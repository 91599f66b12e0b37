// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#pragma once

#include "colortiger/color.hpp"
#include "colortiger/image.hpp"

#include <vector>

namespace colortiger {

/// Statistics-based single-image illuminant estimators. All of them consider
/// valid pixels only (zero-valued valid pixels included) and throw
/// NoValidPixels on an image without any, ZeroVector when every valid pixel
/// is black.

/// Normalized per-channel mean.
Illuminant gray_world(const LinearImage& img);

/// Normalized per-channel maximum.
Illuminant white_patch(const LinearImage& img);

/// Normalized per-channel Minkowski p-mean, (mean f^p)^(1/p). Evaluated as
/// m * (mean (f/m)^p)^(1/p) with m the channel maximum so that large p on
/// 16-bit data cannot overflow. p = 1 is Gray-world; p -> inf tends to
/// White-patch.
Illuminant shades_of_gray(const LinearImage& img, int p);

struct SogSweepConfig {
    int n = 8; ///< upper Minkowski power, >= 1
};

/// shades_of_gray(img, p) for p = 1..n, in order.
std::vector<Illuminant> sog_sweep(const LinearImage& img, const SogSweepConfig& cfg = {});

} // namespace colortiger
