// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#pragma once

#include "colortiger/color.hpp"
#include "colortiger/image.hpp"
#include "colortiger/ppm.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace colortiger {

/// How raw sensor samples become a LinearImage.
struct PreprocessProfile {
    std::string name = "linear";
    int black_level = 0;
    /// Pixels with any raw channel >= (image max - margin) are invalid.
    /// Unset disables the saturation test.
    std::optional<int> saturation_margin;
    /// Pixels with row >= mask_row and column >= mask_col are invalid
    /// (0-based, as stored). Both must be set to enable the mask.
    std::optional<std::size_t> mask_row;
    std::optional<std::size_t> mask_col;
};

/// Black level 2048, saturation margin 2, calibration object in the
/// rectangle starting at row 1050, column 2050.
PreprocessProfile cube_profile();
/// No black level, no saturation test, no mask.
PreprocessProfile linear_profile();
/// "cube" or "linear"; throws InvalidConfig otherwise.
PreprocessProfile profile_by_name(const std::string& name);

/// Throws EmptyImage, AllPixelsInvalid.
LinearImage preprocess(const RawImage& raw, const PreprocessProfile& profile);

/// Quantizes to 16 bits with `scale` applied first (values clamp to
/// [0, 65535]); the validity mask is not representable and is dropped.
RawImage quantize(const LinearImage& img, double scale);

struct ManifestEntry {
    std::filesystem::path image_path; ///< resolved against the manifest directory
    Illuminant ground_truth;
    std::optional<Illuminant> second_ground_truth;
};

/// CSV manifest:
///
///     # profile=cube          (optional, before the header)
///     path,r,g,b[,r2,g2,b2]
///     img/0001.ppm,0.31,0.52,0.19
///
/// Paths may not contain commas.
struct DatasetManifest {
    std::vector<ManifestEntry> entries;
    std::string profile = "linear";

    std::size_t size() const { return entries.size(); }
    std::vector<Illuminant> ground_truths() const;
};

/// Throws ParseError (message carries the line number), InvalidGroundTruth,
/// MissingImage (only when check_files is set), EmptyInput.
DatasetManifest parse_manifest(std::istream& in, const std::filesystem::path& base_dir, bool check_files);
DatasetManifest load_manifest(const std::filesystem::path& path);

/// Paths are written relative to `base_dir` when possible.
void write_manifest(std::ostream& out, const DatasetManifest& manifest, const std::filesystem::path& base_dir);
void save_manifest(const std::filesystem::path& path, const DatasetManifest& manifest);

/// Reads and preprocesses every manifest image; the profile defaults to the
/// one named in the manifest.
std::vector<LinearImage> load_images(const DatasetManifest& manifest, unsigned threads = 1);
std::vector<LinearImage> load_images(const DatasetManifest& manifest, const PreprocessProfile& profile,
                                     unsigned threads = 1);

/// Seeded shuffle of 0..count-1 split into k folds whose sizes differ by
/// at most one (earlier folds are larger). Indices inside a fold ascend.
/// Throws InvalidConfig for k < 2, TooFewEntries for count < k.
std::vector<std::vector<std::size_t>> kfold(std::size_t count, std::size_t k, std::uint64_t seed);
std::vector<std::vector<std::size_t>> kfold(const DatasetManifest& manifest, std::size_t k, std::uint64_t seed);

} // namespace colortiger
