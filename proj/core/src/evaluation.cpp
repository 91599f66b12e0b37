// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#include "colortiger/evaluation.hpp"

#include "colortiger/data.hpp"
#include "colortiger/error.hpp"
#include "colortiger/estimators.hpp"
#include "colortiger/parallel.hpp"
#include "colortiger/random.hpp"

#include <algorithm>
#include <optional>

namespace colortiger {

CrossValidationResult cross_validate_color_tiger(std::span<const LinearImage> images,
                                                 const CrossValidationConfig& cfg)
{
    const std::size_t n = images.size();
    const auto splits = kfold(n, cfg.folds, cfg.train.seed);

    // Per-image work is shared by every fold.
    std::vector<std::vector<Illuminant>> sweeps(n);
    std::vector<std::optional<Illuminant>> gw(n), wp(n);
    parallel_for(n, cfg.train.threads, [&](std::size_t i) {
        sweeps[i] = sog_sweep(images[i], SogSweepConfig{cfg.train.n});
        gw[i] = gray_world(images[i]);
        wp[i] = white_patch(images[i]);
    });

    CrossValidationResult result;
    result.fold_of.assign(n, 0);
    std::vector<std::optional<Illuminant>> ct(n);

    for (std::size_t f = 0; f < splits.size(); ++f) {
        std::vector<std::size_t> train;
        for (std::size_t g = 0; g < splits.size(); ++g) {
            if (g != f)
                train.insert(train.end(), splits[g].begin(), splits[g].end());
        }
        std::sort(train.begin(), train.end());
        if (cfg.train_limit && *cfg.train_limit < train.size()) {
            Rng rng(derive_seed(cfg.train.seed, f));
            for (std::size_t i = train.size(); i > 1; --i)
                std::swap(train[i - 1], train[rng.index(i)]);
            train.resize(*cfg.train_limit);
            std::sort(train.begin(), train.end());
        }
        if (train.empty())
            throw Error(ErrorCode::EmptyInput, "cross-validation fold has no training images");

        std::vector<Illuminant> pool;
        for (std::size_t i : train)
            pool.insert(pool.end(), sweeps[i].begin(), sweeps[i].end());
        TigerModel model = train_color_tiger_from_pool(pool, cfg.train);

        for (std::size_t i : splits[f]) {
            ct[i] = model.centers[vote(*gw[i], *wp[i], model.centers)];
            result.fold_of[i] = f;
        }
        result.folds.push_back(FoldResult{splits[f], std::move(train), std::move(model)});
    }

    for (std::size_t i = 0; i < n; ++i) {
        result.color_tiger.push_back(*ct[i]);
        result.gray_world.push_back(*gw[i]);
        result.white_patch.push_back(*wp[i]);
    }
    return result;
}

std::vector<SummaryRow> summarize_cross_validation(const CrossValidationResult& result,
                                                   std::span<const Illuminant> ground_truths)
{
    const std::vector<double> ct = angular_errors(result.color_tiger, ground_truths);

    std::vector<SummaryRow> rows;
    for (std::size_t f = 0; f < result.folds.size(); ++f) {
        std::vector<double> fold_errors;
        for (std::size_t i : result.folds[f].test_indices)
            fold_errors.push_back(ct[i]);
        rows.push_back({"ct/fold" + std::to_string(f), summarize(fold_errors)});
    }
    rows.push_back({"ct", summarize(ct)});
    rows.push_back({"gw", summarize(angular_errors(result.gray_world, ground_truths))});
    rows.push_back({"wp", summarize(angular_errors(result.white_patch, ground_truths))});
    return rows;
}

} // namespace colortiger
