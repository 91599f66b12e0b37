// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#include "colortiger/model_io.hpp"

#include "colortiger/error.hpp"

#include <fmt/format.h>

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

namespace colortiger {

namespace {

std::string triplet(const Rgb& v)
{
    return fmt::format("{:.17g} {:.17g} {:.17g}", v.r, v.g, v.b);
}

void write_common(std::ostream& out, std::string_view method, const TrainConfig& cfg,
                  const std::string& provenance, const CenterPair& centers)
{
    out << "format_version=" << kModelFormatVersion << '\n'
        << "method=" << method << '\n'
        << "n=" << cfg.n << '\n'
        << fmt::format("t={:.17g}\n", cfg.t)
        << "seed=" << cfg.seed << '\n'
        << "provenance=" << provenance << '\n'
        << "center0=" << triplet(centers[0].rgb()) << '\n'
        << "center1=" << triplet(centers[1].rgb()) << '\n';
}

[[noreturn]] void bad(const std::string& what)
{
    throw Error(ErrorCode::InvalidModel, what);
}

class Fields {
public:
    explicit Fields(std::istream& in)
    {
        std::string line;
        int number = 0;
        while (std::getline(in, line)) {
            ++number;
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty() || line.front() == '#')
                continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                bad(fmt::format("line {}: expected key=value", number));
            values_[line.substr(0, eq)] = line.substr(eq + 1);
        }
    }

    const std::string& text(const std::string& key) const
    {
        const auto it = values_.find(key);
        if (it == values_.end())
            bad("missing key '" + key + "'");
        return it->second;
    }

    bool has(const std::string& key) const { return values_.count(key) != 0; }

    template <typename T>
    T number(const std::string& key) const
    {
        const std::string& s = text(key);
        T value{};
        const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc{} || end != s.data() + s.size())
            bad("key '" + key + "' is not a valid number: '" + s + "'");
        return value;
    }

    Rgb rgb(const std::string& key) const
    {
        std::istringstream ss(text(key));
        ss.imbue(std::locale::classic());
        Rgb v;
        std::string extra;
        if (!(ss >> v.r >> v.g >> v.b) || (ss >> extra))
            bad("key '" + key + "' must hold three reals");
        return v;
    }

private:
    std::map<std::string, std::string> values_;
};

CenterPair read_centers(const Fields& f)
{
    try {
        const Illuminant c0(f.rgb("center0"));
        const Illuminant c1(f.rgb("center1"));
        if (rb_chromaticity(c1).r > rb_chromaticity(c0).r)
            bad("centers are not ordered warm first");
        return {c0, c1};
    } catch (const Error& e) {
        if (e.code() == ErrorCode::InvalidModel)
            throw;
        bad(std::string("invalid center: ") + e.what());
    }
}

GainTriplet read_gains(const Fields& f, const std::string& key)
{
    try {
        return GainTriplet(f.rgb(key));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::InvalidModel)
            throw;
        bad("invalid " + key + ": " + e.what());
    }
}

} // namespace

void write_model(std::ostream& out, const TigerModel& model)
{
    write_common(out, "ct", model.config, model.provenance, model.centers);
}

void write_model(std::ostream& out, const BengalModel& model)
{
    write_common(out, "cbt", model.config, model.provenance, model.centers);
    out << "gains_source=" << triplet(model.source_gains.rgb()) << '\n'
        << "gains_target=" << triplet(model.target_gains.rgb()) << '\n';
}

AnyModel read_model(std::istream& in)
{
    const Fields f(in);
    if (f.number<int>("format_version") != kModelFormatVersion)
        bad("unsupported format_version " + f.text("format_version"));

    const std::string& method = f.text("method");
    if (method != "ct" && method != "cbt")
        bad("unknown method '" + method + "'");

    TrainConfig cfg;
    cfg.n = f.number<int>("n");
    cfg.t = f.number<double>("t");
    cfg.seed = f.number<std::uint64_t>("seed");
    const std::string provenance = f.has("provenance") ? f.text("provenance") : std::string{};
    const CenterPair centers = read_centers(f);

    if (method == "ct")
        return TigerModel{centers, cfg, provenance};
    return BengalModel{read_gains(f, "gains_source"), read_gains(f, "gains_target"), centers, cfg, provenance};
}

void save_model(const std::filesystem::path& path, const AnyModel& model)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::Io, "cannot write model file " + path.string());
    std::visit([&](const auto& m) { write_model(out, m); }, model);
    if (!out)
        throw Error(ErrorCode::Io, "failed writing model file " + path.string());
}

AnyModel load_model(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::Io, "cannot open model file " + path.string());
    return read_model(in);
}

} // namespace colortiger
