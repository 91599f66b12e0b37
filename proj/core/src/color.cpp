// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#include "colortiger/color.hpp"

#include "colortiger/error.hpp"

#include <cmath>
#include <numbers>

namespace colortiger {

double norm(const Rgb& a)
{
    return std::hypot(a.r, a.g, a.b);
}

Illuminant::Illuminant(const Rgb& v)
{
    for (std::size_t c = 0; c < 3; ++c) {
        if (!std::isfinite(v[c]) || v[c] < 0.0)
            throw Error(ErrorCode::InvalidVector, "illuminant channels must be finite and non-negative");
    }
    const double n = norm(v);
    if (!(n > 0.0))
        throw Error(ErrorCode::ZeroVector, "illuminant has no positive channel");
    v_ = v * (1.0 / n);
}

Illuminant normalize(const Rgb& v)
{
    return Illuminant(v);
}

double angular_distance(const Illuminant& a, const Illuminant& b)
{
    // atan2 of |a x b| and a.b stays accurate near 0 and 180 degrees, where
    // arccos of the dot product loses about half of the significant digits.
    const double s = norm(cross(a.rgb(), b.rgb()));
    const double c = dot(a.rgb(), b.rgb());
    return std::atan2(s, c) * (180.0 / std::numbers::pi);
}

double angular_distance(const Rgb& a, const Rgb& b)
{
    return angular_distance(Illuminant(a), Illuminant(b));
}

double cosine_similarity(const Illuminant& a, const Illuminant& b)
{
    return dot(a.rgb(), b.rgb());
}

Chromaticity rb_chromaticity(const Rgb& v)
{
    const double sum = v.r + v.g + v.b;
    if (!(sum > 0.0))
        throw Error(ErrorCode::ZeroVector, "chromaticity of a zero-sum vector");
    return {v.r / sum, v.b / sum};
}

} // namespace colortiger
