// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#include "colortiger/data.hpp"

#include "colortiger/error.hpp"
#include "colortiger/parallel.hpp"
#include "colortiger/random.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace colortiger {

namespace fs = std::filesystem;

PreprocessProfile cube_profile()
{
    return {"cube", 2048, 2, std::size_t{1050}, std::size_t{2050}};
}

PreprocessProfile linear_profile()
{
    return {"linear", 0, std::nullopt, std::nullopt, std::nullopt};
}

PreprocessProfile profile_by_name(const std::string& name)
{
    if (name == "cube")
        return cube_profile();
    if (name == "linear")
        return linear_profile();
    throw Error(ErrorCode::InvalidConfig, "unknown preprocessing profile '" + name + "'");
}

LinearImage preprocess(const RawImage& raw, const PreprocessProfile& profile)
{
    const std::size_t n = raw.width * raw.height;
    if (n == 0 || raw.samples.size() != n * 3)
        throw Error(ErrorCode::EmptyImage, "raw image is empty or malformed");

    int saturation_threshold = std::numeric_limits<int>::max();
    if (profile.saturation_margin) {
        const int m = *std::max_element(raw.samples.begin(), raw.samples.end());
        saturation_threshold = m - *profile.saturation_margin;
    }
    const bool masked = profile.mask_row.has_value() && profile.mask_col.has_value();

    std::vector<Rgb> pixels(n);
    std::vector<std::uint8_t> valid(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t row = i / raw.width;
        const std::size_t col = i % raw.width;
        Rgb p;
        for (std::size_t c = 0; c < 3; ++c) {
            const int v = raw.at(i, c);
            if (v >= saturation_threshold)
                valid[i] = 0;
            p[c] = static_cast<double>(std::max(0, v - profile.black_level));
        }
        if (masked && row >= *profile.mask_row && col >= *profile.mask_col)
            valid[i] = 0;
        pixels[i] = p;
    }

    LinearImage img(raw.width, raw.height, std::move(pixels), std::move(valid));
    if (img.valid_count() == 0)
        throw Error(ErrorCode::AllPixelsInvalid, "preprocessing left no valid pixels");
    return img;
}

RawImage quantize(const LinearImage& img, double scale)
{
    RawImage raw;
    raw.width = img.width();
    raw.height = img.height();
    raw.maxval = 65535;
    raw.samples.resize(img.size() * 3);
    for (std::size_t i = 0; i < img.size(); ++i) {
        for (std::size_t c = 0; c < 3; ++c) {
            const double v = std::clamp(std::round(img.pixel(i)[c] * scale), 0.0, 65535.0);
            raw.samples[i * 3 + c] = static_cast<std::uint16_t>(v);
        }
    }
    return raw;
}

std::vector<Illuminant> DatasetManifest::ground_truths() const
{
    std::vector<Illuminant> out;
    out.reserve(entries.size());
    for (const auto& e : entries)
        out.push_back(e.ground_truth);
    return out;
}

namespace {

std::vector<std::string> split_csv(const std::string& line)
{
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ','))
        fields.push_back(field);
    if (!line.empty() && line.back() == ',')
        fields.emplace_back();
    return fields;
}

std::string trimmed(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

double parse_real(const std::string& text, int line)
{
    const std::string s = trimmed(text);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || end != s.data() + s.size())
        throw Error(ErrorCode::ParseError, fmt::format("manifest line {}: '{}' is not a number", line, s));
    return value;
}

Illuminant parse_truth(const std::vector<std::string>& fields, std::size_t first, int line)
{
    const Rgb v{parse_real(fields[first], line), parse_real(fields[first + 1], line),
                parse_real(fields[first + 2], line)};
    try {
        return Illuminant(v);
    } catch (const Error&) {
        throw Error(ErrorCode::InvalidGroundTruth,
                    fmt::format("manifest line {}: ground truth ({}, {}, {}) is not a valid illuminant", line,
                                v.r, v.g, v.b));
    }
}

} // namespace

DatasetManifest parse_manifest(std::istream& in, const fs::path& base_dir, bool check_files)
{
    DatasetManifest manifest;
    std::string line;
    int number = 0;
    bool header_seen = false;
    bool two_truths = false;
    std::set<fs::path> seen;

    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (trimmed(line).empty())
            continue;
        if (line.front() == '#') {
            const std::string body = trimmed(line.substr(1));
            if (body.rfind("profile=", 0) == 0) {
                manifest.profile = trimmed(body.substr(8));
                profile_by_name(manifest.profile);
            }
            continue;
        }

        auto fields = split_csv(line);
        for (auto& f : fields)
            f = trimmed(f);

        if (!header_seen) {
            const std::vector<std::string> one{"path", "r", "g", "b"};
            const std::vector<std::string> two{"path", "r", "g", "b", "r2", "g2", "b2"};
            if (fields == one) {
                two_truths = false;
            } else if (fields == two) {
                two_truths = true;
            } else {
                throw Error(ErrorCode::ParseError,
                            fmt::format("manifest line {}: expected header path,r,g,b[,r2,g2,b2]", number));
            }
            header_seen = true;
            continue;
        }

        const bool has_second = two_truths && fields.size() == 7
                                && !(fields[4].empty() && fields[5].empty() && fields[6].empty());
        if (fields.size() != 4 && !(two_truths && fields.size() == 7))
            throw Error(ErrorCode::ParseError,
                        fmt::format("manifest line {}: expected {} columns, got {}", number,
                                    two_truths ? "4 or 7" : "4", fields.size()));
        if (fields[0].empty())
            throw Error(ErrorCode::ParseError, fmt::format("manifest line {}: empty path", number));

        fs::path path(fields[0]);
        if (path.is_relative())
            path = base_dir / path;
        path = path.lexically_normal();
        if (!seen.insert(path).second)
            throw Error(ErrorCode::ParseError,
                        fmt::format("manifest line {}: duplicate path '{}'", number, fields[0]));
        if (check_files && !fs::exists(path))
            throw Error(ErrorCode::MissingImage,
                        fmt::format("manifest line {}: image '{}' does not exist", number, path.string()));

        ManifestEntry entry{path, parse_truth(fields, 1, number), std::nullopt};
        if (has_second)
            entry.second_ground_truth = parse_truth(fields, 4, number);
        manifest.entries.push_back(std::move(entry));
    }

    if (!header_seen)
        throw Error(ErrorCode::ParseError, "manifest has no header row");
    if (manifest.entries.empty())
        throw Error(ErrorCode::EmptyInput, "manifest has no entries");
    return manifest;
}

DatasetManifest load_manifest(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::Io, "cannot open manifest " + path.string());
    return parse_manifest(in, path.parent_path(), true);
}

void write_manifest(std::ostream& out, const DatasetManifest& manifest, const fs::path& base_dir)
{
    bool two_truths = false;
    for (const auto& e : manifest.entries)
        two_truths = two_truths || e.second_ground_truth.has_value();

    out << "# profile=" << manifest.profile << '\n';
    out << (two_truths ? "path,r,g,b,r2,g2,b2\n" : "path,r,g,b\n");
    for (const auto& e : manifest.entries) {
        fs::path p = e.image_path;
        if (!base_dir.empty()) {
            const fs::path rel = p.lexically_relative(base_dir);
            if (!rel.empty() && *rel.begin() != "..")
                p = rel;
        }
        const auto& g = e.ground_truth;
        out << p.generic_string() << fmt::format(",{:.17g},{:.17g},{:.17g}", g.r(), g.g(), g.b());
        if (two_truths) {
            if (e.second_ground_truth) {
                const auto& s = *e.second_ground_truth;
                out << fmt::format(",{:.17g},{:.17g},{:.17g}", s.r(), s.g(), s.b());
            } else {
                out << ",,,";
            }
        }
        out << '\n';
    }
}

void save_manifest(const fs::path& path, const DatasetManifest& manifest)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::Io, "cannot write manifest " + path.string());
    write_manifest(out, manifest, path.parent_path());
}

std::vector<LinearImage> load_images(const DatasetManifest& manifest, unsigned threads)
{
    return load_images(manifest, profile_by_name(manifest.profile), threads);
}

std::vector<LinearImage> load_images(const DatasetManifest& manifest, const PreprocessProfile& profile,
                                     unsigned threads)
{
    std::vector<std::optional<LinearImage>> slots(manifest.size());
    parallel_for(manifest.size(), threads, [&](std::size_t i) {
        const auto& path = manifest.entries[i].image_path;
        try {
            slots[i].emplace(preprocess(read_ppm(path), profile));
        } catch (const Error& e) {
            if (e.code() == ErrorCode::Io)
                throw Error(ErrorCode::MissingImage, e.what());
            throw Error(e.code(), path.string() + ": " + e.what());
        }
    });
    std::vector<LinearImage> images;
    images.reserve(slots.size());
    for (auto& s : slots)
        images.push_back(std::move(*s));
    return images;
}

std::vector<std::vector<std::size_t>> kfold(std::size_t count, std::size_t k, std::uint64_t seed)
{
    if (k < 2)
        throw Error(ErrorCode::InvalidConfig, "k-fold needs k >= 2");
    if (count < k)
        throw Error(ErrorCode::TooFewEntries, fmt::format("{} entries cannot fill {} folds", count, k));

    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng rng(seed);
    for (std::size_t i = count; i > 1; --i)
        std::swap(order[i - 1], order[rng.index(i)]);

    std::vector<std::vector<std::size_t>> folds(k);
    const std::size_t base = count / k;
    const std::size_t extra = count % k;
    std::size_t pos = 0;
    for (std::size_t f = 0; f < k; ++f) {
        const std::size_t size = base + (f < extra ? 1 : 0);
        folds[f].assign(order.begin() + static_cast<std::ptrdiff_t>(pos),
                        order.begin() + static_cast<std::ptrdiff_t>(pos + size));
        std::sort(folds[f].begin(), folds[f].end());
        pos += size;
    }
    return folds;
}

std::vector<std::vector<std::size_t>> kfold(const DatasetManifest& manifest, std::size_t k, std::uint64_t seed)
{
    return kfold(manifest.size(), k, seed);
}

} // namespace colortiger
