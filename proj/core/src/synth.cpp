// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#include "colortiger/synth.hpp"

#include "colortiger/error.hpp"
#include "colortiger/parallel.hpp"
#include "colortiger/random.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>

namespace colortiger {

namespace fs = std::filesystem;

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kWrittenPeak = 60000.0;

Rgb rotate_towards(const Rgb& from, const Rgb& unit_tangent, double angle_rad)
{
    return from * std::cos(angle_rad) + unit_tangent * std::sin(angle_rad);
}

Rgb normalize_signed(const Rgb& v)
{
    return v * (1.0 / norm(v));
}

std::pair<Rgb, Rgb> tangent_basis(const Rgb& d)
{
    // Reference axis least aligned with d keeps the cross product well conditioned.
    Rgb axis{1.0, 0.0, 0.0};
    if (std::abs(d.g) <= std::abs(d.r) && std::abs(d.g) <= std::abs(d.b))
        axis = {0.0, 1.0, 0.0};
    else if (std::abs(d.b) <= std::abs(d.r))
        axis = {0.0, 0.0, 1.0};
    const Rgb u = normalize_signed(cross(d, axis));
    return {u, cross(d, u)};
}

} // namespace

CenterPair symmetric_modes(double separation_deg)
{
    const Rgb white = Rgb{1.0, 1.0, 1.0} * (1.0 / std::sqrt(3.0));
    const Rgb red_blue = Rgb{1.0, 0.0, -1.0} * (1.0 / std::sqrt(2.0));
    const double half = 0.5 * separation_deg * kDegToRad;
    return {Illuminant(rotate_towards(white, red_blue, half)), Illuminant(rotate_towards(white, red_blue, -half))};
}

Illuminant jitter(const Illuminant& direction, double spread_deg, Rng& rng)
{
    if (spread_deg <= 0.0)
        return direction;
    const auto [u1, u2] = tangent_basis(direction.rgb());
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const double a = rng.normal() * spread_deg * kDegToRad;
        const double b = rng.normal() * spread_deg * kDegToRad;
        const double angle = std::hypot(a, b);
        if (angle == 0.0)
            return direction;
        const Rgb tangent = (u1 * a + u2 * b) * (1.0 / angle);
        const Rgb v = rotate_towards(direction.rgb(), tangent, angle);
        if (v.r > 0.0 && v.g > 0.0 && v.b > 0.0)
            return Illuminant(v);
    }
    throw Error(ErrorCode::InvalidConfig, "angular spread too large to keep channels positive");
}

void validate(const SynthConfig& cfg)
{
    auto fail = [](const std::string& what) { throw Error(ErrorCode::InvalidConfig, "synth: " + what); };
    if (cfg.image_count == 0)
        fail("image_count must be positive");
    if (cfg.pixels_per_image == 0)
        fail("pixels_per_image must be positive");
    if (!(cfg.mode_mix >= 0.0 && cfg.mode_mix <= 1.0))
        fail("mode_mix must lie in [0, 1]");
    if (!(cfg.outlier_fraction >= 0.0 && cfg.outlier_fraction <= 1.0))
        fail("outlier_fraction must lie in [0, 1]");
    if (!(cfg.mode_spread >= 0.0) || !(cfg.scene_cast >= 0.0) || !(cfg.outlier_noise >= 0.0))
        fail("angular spreads must be non-negative");
    if (!(cfg.noise_sigma >= 0.0))
        fail("noise_sigma must be non-negative");
}

SynthDataset synth_dataset(const SynthConfig& cfg, unsigned threads)
{
    validate(cfg);
    const std::size_t n = cfg.image_count;
    const Illuminant white(Rgb{1.0, 1.0, 1.0});

    std::vector<std::optional<LinearImage>> images(n);
    std::vector<std::optional<Illuminant>> scene(n);
    std::vector<std::uint8_t> outlier(n, 0);

    parallel_for(n, threads, [&](std::size_t i) {
        Rng rng(derive_seed(cfg.seed, i));
        const Illuminant& mode = rng.uniform() < cfg.mode_mix ? cfg.mode_a : cfg.mode_b;
        const Illuminant e = jitter(mode, cfg.mode_spread, rng);
        const bool is_outlier = rng.uniform() < cfg.outlier_fraction;
        const Rgb cast = jitter(white, cfg.scene_cast, rng).rgb() * std::sqrt(3.0);
        const double heavy = is_outlier ? cfg.outlier_noise : 0.0;
        const Rgb light = hadamard(cfg.gains.rgb(), e.rgb());

        std::vector<Rgb> pixels(cfg.pixels_per_image);
        for (auto& px : pixels) {
            Rgb reflectance{rng.uniform_open_closed(), rng.uniform_open_closed(), rng.uniform_open_closed()};
            px = hadamard(light, hadamard(cast, reflectance));
            if (heavy > 0.0) {
                // Mean-one log-normal factor per channel.
                for (std::size_t c = 0; c < 3; ++c)
                    px[c] *= std::exp(heavy * rng.normal() - 0.5 * heavy * heavy);
            }
            if (cfg.noise_sigma > 0.0) {
                for (std::size_t c = 0; c < 3; ++c)
                    px[c] = std::max(0.0, px[c] * (1.0 + cfg.noise_sigma * rng.normal()));
            }
        }
        images[i].emplace(cfg.pixels_per_image, 1, std::move(pixels));
        scene[i] = e;
        outlier[i] = is_outlier ? 1 : 0;
    });

    SynthDataset out{{}, {}, cfg.gains, {}, std::move(outlier)};
    out.images.reserve(n);
    out.scene_illuminants.reserve(n);
    out.manifest.profile = "linear";
    for (std::size_t i = 0; i < n; ++i) {
        out.images.push_back(std::move(*images[i]));
        out.scene_illuminants.push_back(*scene[i]);
        out.manifest.entries.push_back(
            {fs::path(fmt::format("synth_{:05}.ppm", i)), apply_gains(*scene[i], cfg.gains), std::nullopt});
    }
    return out;
}

void write_synth_sidecar(std::ostream& out, const SynthConfig& cfg, const GainTriplet& gains)
{
    auto triplet = [](const Rgb& v) { return fmt::format("{:.17g} {:.17g} {:.17g}", v.r, v.g, v.b); };
    out << "image_count=" << cfg.image_count << '\n'
        << "pixels_per_image=" << cfg.pixels_per_image << '\n'
        << "mode_a=" << triplet(cfg.mode_a.rgb()) << '\n'
        << "mode_b=" << triplet(cfg.mode_b.rgb()) << '\n'
        << fmt::format("mode_spread={:.17g}\n", cfg.mode_spread)
        << fmt::format("mode_mix={:.17g}\n", cfg.mode_mix)
        << fmt::format("noise_sigma={:.17g}\n", cfg.noise_sigma)
        << fmt::format("scene_cast={:.17g}\n", cfg.scene_cast)
        << fmt::format("outlier_fraction={:.17g}\n", cfg.outlier_fraction)
        << fmt::format("outlier_noise={:.17g}\n", cfg.outlier_noise)
        << "seed=" << cfg.seed << '\n'
        << "gains=" << triplet(gains.rgb()) << '\n';
}

void write_synth_dataset(const SynthDataset& data, const SynthConfig& cfg, const fs::path& dir)
{
    fs::create_directories(dir);
    DatasetManifest manifest = data.manifest;
    for (std::size_t i = 0; i < data.images.size(); ++i) {
        const LinearImage& img = data.images[i];
        double peak = 0.0;
        for (const auto& p : img.pixels())
            peak = std::max({peak, p.r, p.g, p.b});
        const double scale = peak > 0.0 ? kWrittenPeak / peak : 1.0;
        const fs::path path = dir / manifest.entries[i].image_path;
        write_ppm(path, quantize(img, scale));
        manifest.entries[i].image_path = path;
    }
    save_manifest(dir / "manifest.csv", manifest);

    std::ofstream sidecar(dir / "synth.txt", std::ios::binary);
    if (!sidecar)
        throw Error(ErrorCode::Io, "cannot write " + (dir / "synth.txt").string());
    write_synth_sidecar(sidecar, cfg, data.gains);
}

} // namespace colortiger
