// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#include "colortiger/cluster.hpp"

#include "colortiger/error.hpp"
#include "colortiger/random.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

namespace colortiger {

namespace {

std::size_t count_distinct(std::span<const Illuminant> points, std::size_t stop_at)
{
    std::vector<std::tuple<double, double, double>> keys;
    keys.reserve(points.size());
    for (const auto& p : points)
        keys.emplace_back(p.r(), p.g(), p.b());
    std::sort(keys.begin(), keys.end());
    std::size_t distinct = keys.empty() ? 0 : 1;
    for (std::size_t i = 1; i < keys.size() && distinct < stop_at; ++i) {
        if (keys[i] != keys[i - 1])
            ++distinct;
    }
    return distinct;
}

std::vector<Illuminant> seed_centers(std::span<const Illuminant> points, std::size_t k, Rng& rng)
{
    std::vector<Illuminant> centers;
    centers.reserve(k);
    centers.push_back(points[rng.index(points.size())]);

    std::vector<double> weight(points.size());
    while (centers.size() < k) {
        double total = 0.0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            double best = angular_distance(points[i], centers.front());
            for (std::size_t c = 1; c < centers.size(); ++c)
                best = std::min(best, angular_distance(points[i], centers[c]));
            weight[i] = best * best;
            total += weight[i];
        }

        std::size_t chosen = points.size();
        if (total > 0.0) {
            const double target = rng.uniform() * total;
            double running = 0.0;
            for (std::size_t i = 0; i < points.size(); ++i) {
                running += weight[i];
                if (weight[i] > 0.0 && running > target) {
                    chosen = i;
                    break;
                }
            }
            if (chosen == points.size()) {
                // Rounding left the target past the last positive weight.
                for (std::size_t i = points.size(); i-- > 0;) {
                    if (weight[i] > 0.0) {
                        chosen = i;
                        break;
                    }
                }
            }
        } else {
            // All remaining points sit on existing centers up to rounding.
            for (std::size_t i = 0; i < points.size(); ++i) {
                if (std::find(centers.begin(), centers.end(), points[i]) == centers.end()) {
                    chosen = i;
                    break;
                }
            }
        }
        centers.push_back(points[chosen]);
    }
    return centers;
}

bool assign(std::span<const Illuminant> points, std::span<const Illuminant> centers,
            std::vector<std::size_t>& assignment)
{
    bool changed = false;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const std::size_t c = nearest_center(points[i], centers);
        if (assignment[i] != c) {
            assignment[i] = c;
            changed = true;
        }
    }
    return changed;
}

void update_centers(std::span<const Illuminant> points, std::vector<std::size_t>& assignment,
                    std::vector<Illuminant>& centers)
{
    const std::size_t k = centers.size();
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t c : assignment)
        ++counts[c];

    for (std::size_t c = 0; c < k; ++c) {
        if (counts[c] > 0)
            continue;
        // Empty cluster: take over the point farthest from its own center,
        // provided its cluster can spare it.
        std::size_t farthest = points.size();
        double farthest_angle = -1.0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (counts[assignment[i]] < 2)
                continue;
            const double a = angular_distance(points[i], centers[assignment[i]]);
            if (a > farthest_angle) {
                farthest_angle = a;
                farthest = i;
            }
        }
        if (farthest == points.size())
            continue;
        --counts[assignment[farthest]];
        counts[c] = 1;
        assignment[farthest] = c;
    }

    std::vector<Rgb> sums(k);
    for (std::size_t i = 0; i < points.size(); ++i)
        sums[assignment[i]] = sums[assignment[i]] + points[i].rgb();
    for (std::size_t c = 0; c < k; ++c) {
        if (counts[c] > 0)
            centers[c] = normalize(sums[c]);
    }
}

} // namespace

std::size_t nearest_center(const Illuminant& p, std::span<const Illuminant> centers)
{
    std::size_t best = 0;
    double best_angle = angular_distance(p, centers[0]);
    for (std::size_t c = 1; c < centers.size(); ++c) {
        const double a = angular_distance(p, centers[c]);
        if (a < best_angle) {
            best_angle = a;
            best = c;
        }
    }
    return best;
}

ClusterModel spherical_kmeans(std::span<const Illuminant> points, std::size_t k, std::uint64_t seed,
                              int max_iterations, int restarts)
{
    if (points.empty())
        throw Error(ErrorCode::EmptyInput, "no points to cluster");
    if (k == 0)
        throw Error(ErrorCode::InvalidConfig, "cluster count must be >= 1");
    if (count_distinct(points, k) < k)
        throw Error(ErrorCode::DegenerateInput,
                    "fewer than " + std::to_string(k) + " distinct directions to cluster");
    if (restarts < 1)
        throw Error(ErrorCode::InvalidConfig, "k-means needs at least one run");

    ClusterModel best;
    for (int run = 0; run < restarts; ++run) {
        Rng rng(run == 0 ? seed : derive_seed(seed, static_cast<std::uint64_t>(run)));
        ClusterModel model;
        model.seed = seed;
        model.centers = seed_centers(points, k, rng);
        model.assignment.assign(points.size(), k);
        assign(points, model.centers, model.assignment);

        while (model.iterations_run < max_iterations) {
            update_centers(points, model.assignment, model.centers);
            ++model.iterations_run;
            if (!assign(points, model.centers, model.assignment))
                break;
        }
        for (std::size_t i = 0; i < points.size(); ++i)
            model.cohesion += dot(points[i].rgb(), model.centers[model.assignment[i]].rgb());
        if (run == 0 || model.cohesion > best.cohesion)
            best = std::move(model);
    }
    return best;
}

std::size_t nearest_rank(std::size_t n, int percentile)
{
    const auto q = static_cast<std::size_t>(std::clamp(percentile, 0, 100));
    return std::max<std::size_t>(1, (q * n + 99) / 100);
}

TrimResult trim_indices(std::span<const Illuminant> points, const TrimConfig& cfg, std::uint64_t seed)
{
    if (points.empty())
        throw Error(ErrorCode::EmptyInput, "no points to trim");
    if (!(cfg.t >= 0.0 && cfg.t < 1.0))
        throw Error(ErrorCode::InvalidConfig, "trim fraction must lie in [0, 1)");

    TrimResult result;
    result.provisional = spherical_kmeans(points, cfg.k, seed);
    const auto& model = result.provisional;

    // The epsilon absorbs representation error, e.g. 100 * (1 - 0.3).
    const int percentile = static_cast<int>(std::floor(100.0 * (1.0 - cfg.t) + 1e-9));

    std::vector<double> angle(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        angle[i] = angular_distance(points[i], model.centers[model.assignment[i]]);

    std::vector<double> radius(model.k(), 0.0);
    for (std::size_t c = 0; c < model.k(); ++c) {
        std::vector<double> member_angles;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (model.assignment[i] == c)
                member_angles.push_back(angle[i]);
        }
        if (member_angles.empty())
            continue;
        std::sort(member_angles.begin(), member_angles.end());
        radius[c] = member_angles[nearest_rank(member_angles.size(), percentile) - 1];
    }

    for (std::size_t i = 0; i < points.size(); ++i) {
        if (angle[i] <= radius[model.assignment[i]])
            result.kept.push_back(i);
    }
    return result;
}

std::vector<Illuminant> trim(std::span<const Illuminant> points, const TrimConfig& cfg, std::uint64_t seed)
{
    const TrimResult r = trim_indices(points, cfg, seed);
    std::vector<Illuminant> out;
    out.reserve(r.kept.size());
    for (std::size_t i : r.kept)
        out.push_back(points[i]);
    return out;
}

} // namespace colortiger
