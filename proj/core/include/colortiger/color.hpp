// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#pragma once

#include <array>
#include <cstddef>

namespace colortiger {

/// Plain linear RGB triplet. No invariants; used for raw sums, pixels and gains.
struct Rgb {
    double r = 0.0;
    double g = 0.0;
    double b = 0.0;

    constexpr double operator[](std::size_t c) const { return c == 0 ? r : (c == 1 ? g : b); }
    constexpr double& operator[](std::size_t c) { return c == 0 ? r : (c == 1 ? g : b); }

    friend constexpr bool operator==(const Rgb&, const Rgb&) = default;
};

constexpr Rgb operator+(const Rgb& a, const Rgb& b) { return {a.r + b.r, a.g + b.g, a.b + b.b}; }
constexpr Rgb operator*(const Rgb& a, double s) { return {a.r * s, a.g * s, a.b * s}; }
constexpr Rgb operator*(double s, const Rgb& a) { return a * s; }

/// Component-wise product (the diagonal-matrix product used for gains).
constexpr Rgb hadamard(const Rgb& a, const Rgb& b) { return {a.r * b.r, a.g * b.g, a.b * b.b}; }
/// Component-wise quotient; the caller guarantees non-zero divisors.
constexpr Rgb divide(const Rgb& a, const Rgb& b) { return {a.r / b.r, a.g / b.g, a.b / b.b}; }
constexpr double dot(const Rgb& a, const Rgb& b) { return a.r * b.r + a.g * b.g + a.b * b.b; }
constexpr Rgb cross(const Rgb& a, const Rgb& b)
{
    return {a.g * b.b - a.b * b.g, a.b * b.r - a.r * b.b, a.r * b.g - a.g * b.r};
}
double norm(const Rgb& a);

/// A light-source colour direction. Always stored L2-normalized with
/// non-negative channels; only the direction is meaningful.
class Illuminant {
public:
    /// Normalizes `v`. Throws ZeroVector when every channel is 0 and
    /// InvalidVector for negative or non-finite channels.
    explicit Illuminant(const Rgb& v);

    double r() const { return v_.r; }
    double g() const { return v_.g; }
    double b() const { return v_.b; }
    const Rgb& rgb() const { return v_; }
    double operator[](std::size_t c) const { return v_[c]; }

    friend bool operator==(const Illuminant&, const Illuminant&) = default;

private:
    Rgb v_;
};

/// rb-chromaticity: r = R/(R+G+B), b = B/(R+G+B).
struct Chromaticity {
    double r = 0.0;
    double b = 0.0;
};

Illuminant normalize(const Rgb& v);

/// Angle between two directions in degrees, in [0, 180].
double angular_distance(const Illuminant& a, const Illuminant& b);
double angular_distance(const Rgb& a, const Rgb& b);

/// Cosine of the angle between two directions.
double cosine_similarity(const Illuminant& a, const Illuminant& b);

Chromaticity rb_chromaticity(const Rgb& v);
inline Chromaticity rb_chromaticity(const Illuminant& v) { return rb_chromaticity(v.rgb()); }

} // namespace colortiger
