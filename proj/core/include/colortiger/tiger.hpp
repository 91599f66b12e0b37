// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#pragma once

#include "colortiger/color.hpp"
#include "colortiger/image.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace colortiger {

struct TrainConfig {
    int n = 8;              ///< Shades-of-Gray powers 1..n are pooled
    double t = 0.3;         ///< trim fraction
    std::uint64_t seed = 0; ///< k-means seeding
    unsigned threads = 1;   ///< per-image sweep workers; never affects results
};

/// Two learned illumination centers, warm (larger r-chromaticity) first.
using CenterPair = std::array<Illuminant, 2>;

struct TigerModel {
    CenterPair centers;
    TrainConfig config;
    std::string provenance;
};

/// Per-channel sensor gains, all strictly positive. Only the direction of
/// the triplet matters downstream.
class GainTriplet {
public:
    explicit GainTriplet(const Rgb& gains);

    double r() const { return g_.r; }
    double g() const { return g_.g; }
    double b() const { return g_.b; }
    const Rgb& rgb() const { return g_; }

    friend bool operator==(const GainTriplet&, const GainTriplet&) = default;

private:
    Rgb g_;
};

struct BengalModel {
    GainTriplet source_gains; ///< G, learned on the training sensor
    GainTriplet target_gains; ///< G', learned on the target sensor
    CenterPair centers;       ///< gain-neutral, warm first
    TrainConfig config;
    std::string provenance;
};

/// Concatenated sog_sweep(img, n) over all images, image-major.
std::vector<Illuminant> pooled_sweep(std::span<const LinearImage> images, int n, unsigned threads = 1);

/// Orders two centers by descending r-chromaticity; ties keep the given order.
CenterPair order_warm_first(const Illuminant& a, const Illuminant& b);

/// Trims the pool with k = 2 and re-clusters the survivors into two centers.
/// Throws EmptyInput / DegenerateInput from the clustering.
CenterPair learn_centers(std::span<const Illuminant> pool, double t, std::uint64_t seed);

/// Index of the center with the largest cosine sum against the Gray-world
/// and White-patch estimates. Exact ties pick index 0.
std::size_t vote(const Illuminant& gray_world_estimate, const Illuminant& white_patch_estimate,
                 const CenterPair& centers);

/// Unsupervised training from at least two images; ground truth is never used.
TigerModel train_color_tiger(std::span<const LinearImage> images, const TrainConfig& cfg = {});
/// Same, from an already pooled set of sweep estimates.
TigerModel train_color_tiger_from_pool(std::span<const Illuminant> pool, const TrainConfig& cfg = {});

/// Returns one of model.centers. Throws NoValidPixels.
Illuminant apply_color_tiger(const LinearImage& img, const TigerModel& model);
std::size_t choose_center(const LinearImage& img, const CenterPair& centers);

/// Channel-wise medians of the L2-normalized pool, renormalized.
GainTriplet gains_from_pool(std::span<const Illuminant> pool);
GainTriplet learn_gains(std::span<const LinearImage> images, int n = 8, unsigned threads = 1);

/// G^-1 e, normalized.
Illuminant neutralize(const Illuminant& e, const GainTriplet& gains);
/// G e, normalized.
Illuminant apply_gains(const Illuminant& e, const GainTriplet& gains);

BengalModel train_color_bengal_tiger(std::span<const LinearImage> train_images,
                                     std::span<const LinearImage> target_images,
                                     const TrainConfig& cfg = {});
/// Votes with gain-neutralized Gray-world / White-patch estimates and
/// returns the chosen center mapped back through the target gains.
Illuminant apply_color_bengal_tiger(const LinearImage& img, const BengalModel& model);
std::size_t choose_center(const LinearImage& img, const BengalModel& model);

} // namespace colortiger
