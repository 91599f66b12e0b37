// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#pragma once

#include "colortiger/color.hpp"
#include "colortiger/data.hpp"
#include "colortiger/image.hpp"
#include "colortiger/random.hpp"
#include "colortiger/tiger.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

namespace colortiger {

/// Warm and cool directions `separation_deg` apart, placed symmetrically
/// about white in the plane spanned by white and (1, 0, -1). The warm one
/// comes first.
CenterPair symmetric_modes(double separation_deg);

/// Rotates `direction` by a random tangent offset whose two components are
/// N(0, spread_deg) (degrees). Resamples until every channel is positive.
Illuminant jitter(const Illuminant& direction, double spread_deg, Rng& rng);

/// Generator for images that follow the diagonal sensor model
/// pixel = gains * illuminant * reflectance.
struct SynthConfig {
    std::size_t image_count = 100;
    std::size_t pixels_per_image = 1024;
    Illuminant mode_a = symmetric_modes(20.0)[0]; ///< warm
    Illuminant mode_b = symmetric_modes(20.0)[1]; ///< cool
    double mode_spread = 2.0; ///< per-axis angular jitter around a mode, degrees
    double mode_mix = 0.5;    ///< probability of mode_a
    GainTriplet gains{Rgb{1.0, 1.0, 1.0}};
    double noise_sigma = 0.0; ///< multiplicative per-channel pixel noise
    /// Per-image chromatic bias of the scene reflectances (per-axis jitter of
    /// the reflectance mean away from gray, degrees). Violates the Gray-world
    /// premise the way real scene content does.
    double scene_cast = 0.0;
    /// Fraction of images whose pixels additionally carry heavy per-channel
    /// log-normal noise with log-space sigma `outlier_noise`. Their
    /// higher-power estimates scatter away from the illuminant.
    double outlier_fraction = 0.0;
    double outlier_noise = 0.0;
    std::uint64_t seed = 0;
};

/// Throws InvalidConfig.
void validate(const SynthConfig& cfg);

struct SynthDataset {
    std::vector<LinearImage> images;
    /// Ground truth per image is the sensor-side illuminant gains * e, which
    /// is what a calibration target would record. Paths are synth_NNNNN.ppm.
    DatasetManifest manifest;
    GainTriplet gains;
    /// Scene illuminant e per image, before sensor gains.
    std::vector<Illuminant> scene_illuminants;
    std::vector<std::uint8_t> outlier;
};

/// Image i is rendered from the stream derive_seed(cfg.seed, i), so output
/// does not depend on `threads`.
SynthDataset synth_dataset(const SynthConfig& cfg, unsigned threads = 1);

/// Writes every image as 16-bit PPM (each scaled so its largest sample is
/// 60000), manifest.csv, and synth.txt recording the config and true gains.
void write_synth_dataset(const SynthDataset& data, const SynthConfig& cfg, const std::filesystem::path& dir);

void write_synth_sidecar(std::ostream& out, const SynthConfig& cfg, const GainTriplet& gains);

} // namespace colortiger
