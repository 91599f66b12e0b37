// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#include "colortiger/tiger.hpp"

#include "colortiger/cluster.hpp"
#include "colortiger/error.hpp"
#include "colortiger/estimators.hpp"
#include "colortiger/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace colortiger {

namespace {

double median_of(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

void check_config(const TrainConfig& cfg)
{
    if (cfg.n < 1)
        throw Error(ErrorCode::InvalidConfig, "sweep upper power n must be >= 1");
    if (!(cfg.t >= 0.0 && cfg.t < 1.0))
        throw Error(ErrorCode::InvalidConfig, "trim fraction t must lie in [0, 1)");
}

} // namespace

GainTriplet::GainTriplet(const Rgb& gains) : g_(gains)
{
    for (std::size_t c = 0; c < 3; ++c) {
        if (!std::isfinite(gains[c]) || !(gains[c] > 0.0))
            throw Error(ErrorCode::InvalidVector, "sensor gains must be finite and strictly positive");
    }
}

std::vector<Illuminant> pooled_sweep(std::span<const LinearImage> images, int n, unsigned threads)
{
    std::vector<std::vector<Illuminant>> per_image(images.size());
    parallel_for(images.size(), threads,
                 [&](std::size_t i) { per_image[i] = sog_sweep(images[i], SogSweepConfig{n}); });

    std::vector<Illuminant> pool;
    pool.reserve(images.size() * static_cast<std::size_t>(std::max(n, 0)));
    for (auto& estimates : per_image)
        pool.insert(pool.end(), estimates.begin(), estimates.end());
    return pool;
}

CenterPair order_warm_first(const Illuminant& a, const Illuminant& b)
{
    if (rb_chromaticity(b).r > rb_chromaticity(a).r)
        return {b, a};
    return {a, b};
}

CenterPair learn_centers(std::span<const Illuminant> pool, double t, std::uint64_t seed)
{
    const std::vector<Illuminant> survivors = trim(pool, TrimConfig{t, 2}, seed);
    const ClusterModel model = spherical_kmeans(survivors, 2, seed);
    return order_warm_first(model.centers[0], model.centers[1]);
}

std::size_t vote(const Illuminant& gray_world_estimate, const Illuminant& white_patch_estimate,
                 const CenterPair& centers)
{
    std::size_t best = 0;
    double best_score = cosine_similarity(centers[0], gray_world_estimate)
                        + cosine_similarity(centers[0], white_patch_estimate);
    for (std::size_t c = 1; c < centers.size(); ++c) {
        const double score = cosine_similarity(centers[c], gray_world_estimate)
                             + cosine_similarity(centers[c], white_patch_estimate);
        if (score > best_score) {
            best_score = score;
            best = c;
        }
    }
    return best;
}

TigerModel train_color_tiger_from_pool(std::span<const Illuminant> pool, const TrainConfig& cfg)
{
    check_config(cfg);
    if (pool.empty())
        throw Error(ErrorCode::EmptyInput, "no estimates to train from");
    return TigerModel{learn_centers(pool, cfg.t, cfg.seed), cfg, {}};
}

TigerModel train_color_tiger(std::span<const LinearImage> images, const TrainConfig& cfg)
{
    check_config(cfg);
    if (images.size() < 2)
        throw Error(ErrorCode::EmptyInput, "Color Tiger training needs at least two images");
    const std::vector<Illuminant> pool = pooled_sweep(images, cfg.n, cfg.threads);
    return train_color_tiger_from_pool(pool, cfg);
}

std::size_t choose_center(const LinearImage& img, const CenterPair& centers)
{
    return vote(gray_world(img), white_patch(img), centers);
}

Illuminant apply_color_tiger(const LinearImage& img, const TigerModel& model)
{
    return model.centers[choose_center(img, model.centers)];
}

GainTriplet gains_from_pool(std::span<const Illuminant> pool)
{
    if (pool.empty())
        throw Error(ErrorCode::EmptyInput, "no estimates to learn gains from");
    Rgb medians;
    std::vector<double> channel(pool.size());
    for (std::size_t c = 0; c < 3; ++c) {
        for (std::size_t i = 0; i < pool.size(); ++i)
            channel[i] = pool[i][c];
        medians[c] = median_of(channel);
    }
    // A channel median of zero would make G singular.
    return GainTriplet(normalize(medians).rgb());
}

GainTriplet learn_gains(std::span<const LinearImage> images, int n, unsigned threads)
{
    if (images.empty())
        throw Error(ErrorCode::EmptyInput, "gain learning needs at least one image");
    if (n < 1)
        throw Error(ErrorCode::InvalidConfig, "sweep upper power n must be >= 1");
    return gains_from_pool(pooled_sweep(images, n, threads));
}

Illuminant neutralize(const Illuminant& e, const GainTriplet& gains)
{
    return normalize(divide(e.rgb(), gains.rgb()));
}

Illuminant apply_gains(const Illuminant& e, const GainTriplet& gains)
{
    return normalize(hadamard(e.rgb(), gains.rgb()));
}

BengalModel train_color_bengal_tiger(std::span<const LinearImage> train_images,
                                     std::span<const LinearImage> target_images, const TrainConfig& cfg)
{
    check_config(cfg);
    if (train_images.empty())
        throw Error(ErrorCode::EmptyInput, "Color Bengal Tiger needs training images");
    if (target_images.empty())
        throw Error(ErrorCode::EmptyInput, "Color Bengal Tiger needs target-sensor images");

    std::vector<Illuminant> pool = pooled_sweep(train_images, cfg.n, cfg.threads);
    const GainTriplet source = gains_from_pool(pool);
    const GainTriplet target = learn_gains(target_images, cfg.n, cfg.threads);

    for (auto& e : pool)
        e = neutralize(e, source);
    return BengalModel{source, target, learn_centers(pool, cfg.t, cfg.seed), cfg, {}};
}

std::size_t choose_center(const LinearImage& img, const BengalModel& model)
{
    const Illuminant gw = neutralize(gray_world(img), model.target_gains);
    const Illuminant wp = neutralize(white_patch(img), model.target_gains);
    return vote(gw, wp, model.centers);
}

Illuminant apply_color_bengal_tiger(const LinearImage& img, const BengalModel& model)
{
    return apply_gains(model.centers[choose_center(img, model)], model.target_gains);
}

} // namespace colortiger
