// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace colortiger {

/// xoshiro256** seeded through splitmix64. Every stochastic step in the
/// library draws from this generator with its own derivation rules below,
/// so outputs are reproducible across platforms and standard libraries
/// (the std distributions are implementation-defined and are not used).
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed);

    std::uint64_t next();
    std::uint64_t operator()() { return next(); }
    static constexpr std::uint64_t min() { return 0; }
    static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Uniform on (0, 1].
    double uniform_open_closed() { return 1.0 - uniform(); }
    /// Uniform integer in [0, n), unbiased. n must be > 0.
    std::size_t index(std::size_t n);
    /// Standard normal (Box-Muller, no cached second value).
    double normal();

private:
    std::array<std::uint64_t, 4> s_;
};

std::uint64_t splitmix64(std::uint64_t& state);

/// Independent seed for sub-stream `stream` of `seed` (per-image streams etc).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

} // namespace colortiger
