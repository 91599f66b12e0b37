// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#pragma once

#include "colortiger/color.hpp"
#include "colortiger/image.hpp"
#include "colortiger/metrics.hpp"
#include "colortiger/tiger.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace colortiger {

struct CrossValidationConfig {
    std::size_t folds = 3;
    /// n, t, seed and threads for every fold; the seed also drives the split.
    TrainConfig train;
    /// Train on at most this many images per fold, drawn by a seeded shuffle
    /// of the fold's training set.
    std::optional<std::size_t> train_limit;
};

struct FoldResult {
    std::vector<std::size_t> test_indices;
    std::vector<std::size_t> train_indices; ///< after train_limit
    TigerModel model;
};

struct CrossValidationResult {
    std::vector<FoldResult> folds;
    /// Per image, in input order.
    std::vector<std::size_t> fold_of;
    std::vector<Illuminant> color_tiger;
    std::vector<Illuminant> gray_world;
    std::vector<Illuminant> white_patch;
};

/// k-fold cross-validated Color Tiger: every image is estimated by the
/// model trained on the other folds. Gray-world and White-patch estimates
/// are reported alongside as baselines.
CrossValidationResult cross_validate_color_tiger(std::span<const LinearImage> images,
                                                 const CrossValidationConfig& cfg);

/// Rows "ct/fold<i>" for every fold, then pooled "ct", "gw" and "wp".
std::vector<SummaryRow> summarize_cross_validation(const CrossValidationResult& result,
                                                   std::span<const Illuminant> ground_truths);

} // namespace colortiger
