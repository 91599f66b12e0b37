// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#include "colortiger/random.hpp"

#include <cmath>
#include <numbers>

namespace colortiger {

namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k)
{
    return (x << k) | (x >> (64 - k));
}

} // namespace

std::uint64_t splitmix64(std::uint64_t& state)
{
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t state = seed ^ (0xd1b54a32d192ed03ULL * (stream + 1));
    splitmix64(state);
    return splitmix64(state);
}

Rng::Rng(std::uint64_t seed)
{
    std::uint64_t state = seed;
    for (auto& word : s_)
        word = splitmix64(state);
}

std::uint64_t Rng::next()
{
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Rng::uniform()
{
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::size_t Rng::index(std::size_t n)
{
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    // Reject the top partial block so every residue is equally likely.
    const std::uint64_t limit = max() - (max() % bound + 1) % bound;
    std::uint64_t x = next();
    while (x > limit)
        x = next();
    return static_cast<std::size_t>(x % bound);
}

double Rng::normal()
{
    const double u1 = uniform_open_closed();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace colortiger
