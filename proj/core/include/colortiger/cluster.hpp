// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#pragma once

#include "colortiger/color.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace colortiger {

struct ClusterModel {
    std::vector<Illuminant> centers;
    /// Index of the nearest center for every input point.
    std::vector<std::size_t> assignment;
    int iterations_run = 0; ///< of the winning run
    std::uint64_t seed = 0;
    /// Sum over points of the cosine to their center; the winning run maximizes it.
    double cohesion = 0.0;

    std::size_t k() const { return centers.size(); }
};

inline constexpr int kMaxKMeansIterations = 100;
inline constexpr int kKMeansRestarts = 10;

/// k-means on the unit sphere with angular distance.
///
/// Seeding is k-means++ with squared angles as weights, driven by Rng(seed).
/// Each iteration moves a center to the normalized sum of its members and
/// reassigns every point to the center with the smallest angle (ties go to
/// the lower index). Stops once assignments no longer change or after
/// `max_iterations` updates. A center that loses all members is reseeded
/// with the point lying farthest from its own center.
///
/// The whole procedure runs `restarts` times, run 0 from Rng(seed) and run r
/// from Rng(derive_seed(seed, r)); the run with the largest cohesion wins,
/// the earliest on ties.
///
/// Throws EmptyInput for no points, InvalidConfig for k == 0 or
/// restarts < 1, DegenerateInput when fewer than k distinct directions exist.
ClusterModel spherical_kmeans(std::span<const Illuminant> points, std::size_t k, std::uint64_t seed,
                              int max_iterations = kMaxKMeansIterations, int restarts = kKMeansRestarts);

/// Index of the center closest in angle to `p`.
std::size_t nearest_center(const Illuminant& p, std::span<const Illuminant> centers);

struct TrimConfig {
    double t = 0.3;    ///< fraction of farthest points removed per cluster, in [0, 1)
    std::size_t k = 2; ///< centers of the provisional clustering
};

struct TrimResult {
    /// Indices into the input of the surviving points, ascending.
    std::vector<std::size_t> kept;
    ClusterModel provisional;
};

/// Outlier trimming: clusters the points, then within every cluster keeps
/// the points whose angle to their center does not exceed the
/// floor(100*(1-t))-th nearest-rank percentile of that cluster's angles.
TrimResult trim_indices(std::span<const Illuminant> points, const TrimConfig& cfg, std::uint64_t seed);

/// The surviving points of trim_indices, in input order.
std::vector<Illuminant> trim(std::span<const Illuminant> points, const TrimConfig& cfg, std::uint64_t seed);

/// 1-based nearest-rank position ceil(q/100 * n), at least 1, for n > 0.
std::size_t nearest_rank(std::size_t n, int percentile);

} // namespace colortiger
