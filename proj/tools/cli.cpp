// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#include "cli.hpp"

#include "colortiger/colortiger.hpp"
#include "colortiger/parallel.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace colortiger::cli {

namespace fs = std::filesystem;

namespace {

unsigned default_threads()
{
    const char* env = std::getenv(kThreadsEnv);
    if (env == nullptr)
        return 1;
    unsigned value = 0;
    const std::string_view s(env);
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || end != s.data() + s.size() || value == 0)
        return 1;
    return value;
}

Rgb parse_triplet(const std::string& text, const std::string& what)
{
    Rgb v;
    std::istringstream ss(text);
    ss.imbue(std::locale::classic());
    char c1 = 0, c2 = 0;
    std::string rest;
    if (!(ss >> v.r >> c1 >> v.g >> c2 >> v.b) || c1 != ',' || c2 != ',' || (ss >> rest))
        throw Error(ErrorCode::InvalidConfig, what + " must be three comma-separated reals, got '" + text + "'");
    return v;
}

std::string full(double v)
{
    return fmt::format("{:.17g}", v);
}

std::ofstream open_output(const fs::path& path)
{
    if (path.has_parent_path())
        fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::Io, "cannot write " + path.string());
    return out;
}

struct ImageSet {
    DatasetManifest manifest;
    std::vector<LinearImage> images;
    fs::path base; ///< manifest directory
};

/// Image path as written in reports: relative to the manifest when it lives below it.
std::string report_path(const fs::path& image, const fs::path& base)
{
    if (base.empty())
        return image.generic_string();
    const fs::path rel = image.lexically_relative(base);
    if (rel.empty() || *rel.begin() == "..")
        return image.generic_string();
    return rel.generic_string();
}

ImageSet load_set(const std::string& manifest_path, const std::string& profile, unsigned threads)
{
    ImageSet set{load_manifest(manifest_path), {}, fs::path(manifest_path).parent_path()};
    const PreprocessProfile p = profile_by_name(profile.empty() ? set.manifest.profile : profile);
    set.images = load_images(set.manifest, p, threads);
    return set;
}

std::vector<Illuminant> run_estimator(std::span<const LinearImage> images, const std::string& method, int p,
                                      unsigned threads)
{
    std::vector<std::optional<Illuminant>> slots(images.size());
    parallel_for(images.size(), threads, [&](std::size_t i) {
        if (method == "gw")
            slots[i] = gray_world(images[i]);
        else if (method == "wp")
            slots[i] = white_patch(images[i]);
        else
            slots[i] = shades_of_gray(images[i], p);
    });
    std::vector<Illuminant> out;
    out.reserve(slots.size());
    for (auto& s : slots)
        out.push_back(*s);
    return out;
}

void write_estimates(const fs::path& path, const ImageSet& set, std::span<const Illuminant> estimates)
{
    const DatasetManifest& manifest = set.manifest;
    auto out = open_output(path);
    out << "path,r,g,b,error\n";
    for (std::size_t i = 0; i < estimates.size(); ++i) {
        const auto& e = estimates[i];
        out << report_path(manifest.entries[i].image_path, set.base) << ',' << full(e.r()) << ',' << full(e.g()) << ','
            << full(e.b()) << ',' << full(angular_distance(e, manifest.entries[i].ground_truth)) << '\n';
    }
}

void print_summary(std::ostream& out, const std::string& method, std::span<const Illuminant> estimates,
                   const DatasetManifest& manifest)
{
    const std::vector<SummaryRow> rows{{method, summarize(angular_errors(estimates, manifest.ground_truths()))}};
    write_summary_table(out, rows);
}

void print_centers(std::ostream& out, const CenterPair& centers)
{
    for (std::size_t c = 0; c < centers.size(); ++c) {
        const auto chroma = rb_chromaticity(centers[c]);
        out << fmt::format("center{} ({}): rgb = ({:.4f}, {:.4f}, {:.4f})  rb = ({:.4f}, {:.4f})\n", c,
                           c == 0 ? "warm" : "cool", centers[c].r(), centers[c].g(), centers[c].b(), chroma.r,
                           chroma.b);
    }
}

std::size_t distinct_count(std::span<const Illuminant> estimates)
{
    std::set<std::tuple<double, double, double>> seen;
    for (const auto& e : estimates)
        seen.emplace(e.r(), e.g(), e.b());
    return seen.size();
}

template <typename Model>
Model expect_model(const std::string& path, const char* method)
{
    AnyModel any = load_model(path);
    if (auto* m = std::get_if<Model>(&any))
        return *m;
    throw Error(ErrorCode::InvalidModel, fmt::format("{} does not hold a '{}' model", path, method));
}

struct Options {
    unsigned threads = 1;
    std::string manifest;
    std::string target;
    std::string image;
    std::string model;
    std::string out;
    std::string profile;
    std::string method = "gw";
    int p = 1;
    int n = 8;
    double t = 0.3;
    std::uint64_t seed = 0;
    std::size_t folds = 3;
    std::vector<std::size_t> train_limits;
    double bin_width = 0.25;
    std::optional<double> trim;

    // synth
    std::size_t count = 100;
    std::size_t pixels = 1024;
    double separation = 20.0;
    double spread = 2.0;
    double mix = 0.5;
    std::string gains = "1,1,1";
    double noise = 0.0;
    double scene_cast = 0.0;
    double outlier_fraction = 0.0;
    double outlier_noise = 0.0;
};

int cmd_estimate(const Options& o, std::ostream& out)
{
    if (o.image.empty() == o.manifest.empty())
        throw Error(ErrorCode::InvalidConfig, "estimate needs exactly one of --image or --manifest");
    if (!o.image.empty()) {
        const PreprocessProfile profile = profile_by_name(o.profile.empty() ? "linear" : o.profile);
        const LinearImage img = preprocess(read_ppm(fs::path(o.image)), profile);
        const Illuminant e = run_estimator(std::span(&img, 1), o.method, o.p, 1).front();
        out << fmt::format("{}: ({:.4f}, {:.4f}, {:.4f})\n", o.method, e.r(), e.g(), e.b());
        if (!o.out.empty()) {
            auto f = open_output(o.out);
            f << "path,r,g,b\n" << o.image << ',' << full(e.r()) << ',' << full(e.g()) << ',' << full(e.b()) << '\n';
        }
        return kExitOk;
    }
    const ImageSet set = load_set(o.manifest, o.profile, o.threads);
    const auto estimates = run_estimator(set.images, o.method, o.p, o.threads);
    print_summary(out, o.method == "sog" ? fmt::format("sog(p={})", o.p) : o.method, estimates, set.manifest);
    if (!o.out.empty())
        write_estimates(o.out, set, estimates);
    return kExitOk;
}

int cmd_train_ct(const Options& o, std::ostream& out)
{
    const ImageSet set = load_set(o.manifest, o.profile, o.threads);
    TigerModel model = train_color_tiger(set.images, TrainConfig{o.n, o.t, o.seed, o.threads});
    model.provenance = fs::path(o.manifest).filename().string();
    save_model(o.out, model);
    out << fmt::format("trained Color Tiger on {} images (n={}, t={:.4f}, seed={})\n", set.images.size(), o.n, o.t,
                       o.seed);
    print_centers(out, model.centers);
    out << "model written to " << o.out << '\n';
    return kExitOk;
}

int cmd_apply_ct(const Options& o, std::ostream& out)
{
    const TigerModel model = expect_model<TigerModel>(o.model, "ct");
    const ImageSet set = load_set(o.manifest, o.profile, o.threads);
    std::vector<std::optional<Illuminant>> slots(set.images.size());
    parallel_for(set.images.size(), o.threads,
                 [&](std::size_t i) { slots[i] = apply_color_tiger(set.images[i], model); });
    std::vector<Illuminant> estimates;
    for (auto& s : slots)
        estimates.push_back(*s);
    print_summary(out, "ct", estimates, set.manifest);
    out << "distinct estimates: " << distinct_count(estimates) << '\n';
    if (!o.out.empty())
        write_estimates(o.out, set, estimates);
    return kExitOk;
}

int cmd_gains(const Options& o, std::ostream& out)
{
    const ImageSet set = load_set(o.manifest, o.profile, o.threads);
    const GainTriplet g = learn_gains(set.images, o.n, o.threads);
    out << fmt::format("gains (L2-normalized): ({:.4f}, {:.4f}, {:.4f})  green-relative: ({:.4f}, 1.0000, {:.4f})\n",
                       g.r(), g.g(), g.b(), g.r() / g.g(), g.b() / g.g());
    if (!o.out.empty()) {
        auto f = open_output(o.out);
        f << "n=" << o.n << '\n' << "gains=" << full(g.r()) << ' ' << full(g.g()) << ' ' << full(g.b()) << '\n';
    }
    return kExitOk;
}

int cmd_train_cbt(const Options& o, std::ostream& out)
{
    const ImageSet train = load_set(o.manifest, o.profile, o.threads);
    const ImageSet target = load_set(o.target, o.profile, o.threads);
    BengalModel model = train_color_bengal_tiger(train.images, target.images, TrainConfig{o.n, o.t, o.seed, o.threads});
    model.provenance = fs::path(o.manifest).filename().string() + "->" + fs::path(o.target).filename().string();
    save_model(o.out, model);
    const auto& gs = model.source_gains;
    const auto& gt = model.target_gains;
    out << fmt::format("trained Color Bengal Tiger on {} images, target sensor sample of {} images\n",
                       train.images.size(), target.images.size());
    out << fmt::format("source gains: ({:.4f}, {:.4f}, {:.4f})\n", gs.r(), gs.g(), gs.b());
    out << fmt::format("target gains: ({:.4f}, {:.4f}, {:.4f})\n", gt.r(), gt.g(), gt.b());
    print_centers(out, model.centers);
    out << "model written to " << o.out << '\n';
    return kExitOk;
}

int cmd_apply_cbt(const Options& o, std::ostream& out)
{
    const BengalModel model = expect_model<BengalModel>(o.model, "cbt");
    const ImageSet set = load_set(o.manifest, o.profile, o.threads);
    std::vector<std::optional<Illuminant>> slots(set.images.size());
    parallel_for(set.images.size(), o.threads,
                 [&](std::size_t i) { slots[i] = apply_color_bengal_tiger(set.images[i], model); });
    std::vector<Illuminant> estimates;
    for (auto& s : slots)
        estimates.push_back(*s);
    print_summary(out, "cbt", estimates, set.manifest);
    out << "distinct estimates: " << distinct_count(estimates) << '\n';
    if (!o.out.empty())
        write_estimates(o.out, set, estimates);
    return kExitOk;
}

int cmd_eval(const Options& o, std::ostream& out)
{
    const ImageSet set = load_set(o.manifest, o.profile, o.threads);
    const auto gts = set.manifest.ground_truths();

    CrossValidationConfig cfg;
    cfg.folds = o.folds;
    cfg.train = TrainConfig{o.n, o.t, o.seed, o.threads};

    if (o.train_limits.size() > 1) {
        std::vector<SummaryRow> rows;
        for (std::size_t limit : o.train_limits) {
            cfg.train_limit = limit;
            const auto result = cross_validate_color_tiger(set.images, cfg);
            rows.push_back({fmt::format("ct/limit{}", limit),
                            summarize(angular_errors(result.color_tiger, gts))});
        }
        write_summary_table(out, rows);
        if (!o.out.empty()) {
            auto f = open_output(fs::path(o.out) / "train_size.csv");
            f << "train_limit,mean,median,trimean,best25,worst25,avg\n";
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const auto& s = rows[i].summary;
                f << o.train_limits[i] << ',' << full(s.mean) << ',' << full(s.median) << ',' << full(s.trimean)
                  << ',' << full(s.best25) << ',' << full(s.worst25) << ',' << full(s.avg) << '\n';
            }
        }
        return kExitOk;
    }

    if (!o.train_limits.empty())
        cfg.train_limit = o.train_limits.front();
    const auto result = cross_validate_color_tiger(set.images, cfg);
    const auto rows = summarize_cross_validation(result, gts);
    out << fmt::format("{}-fold cross-validation on {} images (n={}, t={:.4f}, seed={})\n", o.folds,
                       set.images.size(), o.n, o.t, o.seed);
    write_summary_table(out, rows);

    if (!o.model.empty()) {
        for (std::size_t f = 0; f < result.folds.size(); ++f) {
            TigerModel m = result.folds[f].model;
            m.provenance = fmt::format("{}#fold{}", fs::path(o.manifest).filename().string(), f);
            save_model(fmt::format("{}.fold{}", o.model, f), m);
        }
    }
    if (!o.out.empty()) {
        const fs::path dir(o.out);
        auto summary = open_output(dir / "summary.csv");
        write_summary_csv(summary, rows);
        auto errors = open_output(dir / "errors.csv");
        errors << "path,fold,ct_error,gw_error,wp_error,ct_r,ct_g,ct_b\n";
        for (std::size_t i = 0; i < gts.size(); ++i) {
            const auto& e = result.color_tiger[i];
            errors << report_path(set.manifest.entries[i].image_path, set.base) << ',' << result.fold_of[i] << ','
                   << full(angular_distance(e, gts[i])) << ',' << full(angular_distance(result.gray_world[i], gts[i]))
                   << ',' << full(angular_distance(result.white_patch[i], gts[i])) << ',' << full(e.r()) << ','
                   << full(e.g()) << ',' << full(e.b()) << '\n';
        }
    }
    return kExitOk;
}

int cmd_sae(const Options& o, std::ostream& out)
{
    const ImageSet set = load_set(o.manifest, o.profile, o.threads);
    const auto estimates = run_estimator(set.images, o.method, o.p, o.threads);
    const auto gts = set.manifest.ground_truths();
    const SaeResult r = sae(gts, estimates);
    out << fmt::format("SAE({}{}) over {} images: {:.4f} deg\n", o.method,
                       o.method == "sog" ? fmt::format(", p={}", o.p) : std::string{}, gts.size(), r.mean_angle);
    if (!o.out.empty()) {
        auto f = open_output(o.out);
        f << "gt_index,est_index,angle\n";
        for (std::size_t i = 0; i < r.est_of_gt.size(); ++i)
            f << i << ',' << r.est_of_gt[i] << ',' << full(angular_distance(gts[i], estimates[r.est_of_gt[i]]))
              << '\n';
    }
    return kExitOk;
}

int cmd_hist(const Options& o, std::ostream& out)
{
    const ImageSet set = load_set(o.manifest, o.profile, o.threads);
    std::vector<Illuminant> estimates = o.method == "sweep" ? pooled_sweep(set.images, o.n, o.threads)
                                                           : run_estimator(set.images, o.method, o.p, o.threads);
    if (o.trim)
        estimates = colortiger::trim(estimates, TrimConfig{*o.trim, 2}, o.seed);
    const auto gts = set.manifest.ground_truths();

    const AngleHistogram est_to_gt = nearest_angle_histogram(estimates, gts, o.bin_width);
    const AngleHistogram gt_to_est = nearest_angle_histogram(gts, estimates, o.bin_width);
    auto median = [](std::vector<double> v) { return summarize(v).median; };
    out << fmt::format("{} estimates, {} ground truths, bin width {:.4f} deg\n", estimates.size(), gts.size(),
                       o.bin_width);
    out << fmt::format("median angle estimate -> closest ground truth: {:.4f} deg\n",
                       median(nearest_angles(estimates, gts)));
    out << fmt::format("median angle ground truth -> closest estimate: {:.4f} deg\n",
                       median(nearest_angles(gts, estimates)));
    if (!o.out.empty()) {
        const fs::path dir(o.out);
        auto a = open_output(dir / "est_to_gt.csv");
        write_histogram_csv(a, est_to_gt);
        auto b = open_output(dir / "gt_to_est.csv");
        write_histogram_csv(b, gt_to_est);
    }
    return kExitOk;
}

int cmd_synth(const Options& o, std::ostream& out)
{
    SynthConfig cfg;
    const CenterPair modes = symmetric_modes(o.separation);
    cfg.image_count = o.count;
    cfg.pixels_per_image = o.pixels;
    cfg.mode_a = modes[0];
    cfg.mode_b = modes[1];
    cfg.mode_spread = o.spread;
    cfg.mode_mix = o.mix;
    cfg.gains = GainTriplet(parse_triplet(o.gains, "--gains"));
    cfg.noise_sigma = o.noise;
    cfg.scene_cast = o.scene_cast;
    cfg.outlier_fraction = o.outlier_fraction;
    cfg.outlier_noise = o.outlier_noise;
    cfg.seed = o.seed;

    const SynthDataset data = synth_dataset(cfg, o.threads);
    write_synth_dataset(data, cfg, o.out);
    out << fmt::format("wrote {} synthetic images of {} pixels to {}\n", data.images.size(), cfg.pixels_per_image,
                       o.out);
    return kExitOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options o;
    o.threads = default_threads();

    CLI::App app{"Unsupervised illuminant estimation (Color Tiger / Color Bengal Tiger) and evaluation tools",
                 "colortiger"};
    app.set_config("--config", "", "key=value config file; command-line flags take precedence");
    app.add_option("--threads", o.threads, "Worker threads (default from COLORTIGER_THREADS, else 1)")
        ->check(CLI::PositiveNumber);
    app.require_subcommand(1);
    app.fallthrough();

    const auto method_check = CLI::IsMember({"gw", "wp", "sog"});
    auto add_manifest = [&](CLI::App* sub, bool required = true) {
        auto* opt = sub->add_option("--manifest", o.manifest, "Dataset manifest (CSV)");
        if (required)
            opt->required();
        sub->add_option("--profile", o.profile, "Preprocessing profile override (linear|cube)")
            ->check(CLI::IsMember({"linear", "cube"}));
    };
    auto add_training = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "Largest Shades-of-Gray power pooled")->capture_default_str()->check(
            CLI::PositiveNumber);
        sub->add_option("--t", o.t, "Trim fraction")->capture_default_str()->check(CLI::Range(0.0, 0.999999));
        sub->add_option("--seed", o.seed, "Clustering seed")->required();
    };

    auto* estimate = app.add_subcommand("estimate", "Gray-world / White-patch / Shades-of-Gray estimates");
    add_manifest(estimate, false);
    estimate->add_option("--image", o.image, "Single 16-bit PPM image");
    estimate->add_option("--method", o.method, "gw|wp|sog")->capture_default_str()->check(method_check);
    estimate->add_option("--p", o.p, "Minkowski power for sog")->capture_default_str()->check(CLI::PositiveNumber);
    estimate->add_option("--out", o.out, "Estimates CSV");

    auto* train_ct = app.add_subcommand("train-ct", "Train Color Tiger without ground truth");
    add_manifest(train_ct);
    add_training(train_ct);
    train_ct->add_option("--out", o.out, "Model file to write")->required();

    auto* apply_ct = app.add_subcommand("apply-ct", "Apply a Color Tiger model");
    add_manifest(apply_ct);
    apply_ct->add_option("--model", o.model, "Model file")->required();
    apply_ct->add_option("--out", o.out, "Estimates CSV");

    auto* gains = app.add_subcommand("gains", "Learn camera sensor gains from unlabeled images");
    add_manifest(gains);
    gains->add_option("--n", o.n, "Largest Shades-of-Gray power pooled")->capture_default_str()->check(
        CLI::PositiveNumber);
    gains->add_option("--out", o.out, "key=value file with the gains");

    auto* train_cbt = app.add_subcommand("train-cbt", "Train Color Bengal Tiger for a target sensor");
    add_manifest(train_cbt);
    train_cbt->add_option("--target", o.target, "Manifest of target-sensor images")->required();
    add_training(train_cbt);
    train_cbt->add_option("--out", o.out, "Model file to write")->required();

    auto* apply_cbt = app.add_subcommand("apply-cbt", "Apply a Color Bengal Tiger model to target-sensor images");
    add_manifest(apply_cbt);
    apply_cbt->add_option("--model", o.model, "Model file")->required();
    apply_cbt->add_option("--out", o.out, "Estimates CSV");

    auto* eval = app.add_subcommand("eval", "Cross-validated Color Tiger evaluation");
    add_manifest(eval);
    add_training(eval);
    eval->add_option("--folds", o.folds, "Number of folds")->capture_default_str()->check(CLI::Range(2, 1000000));
    eval->add_option("--train-limit", o.train_limits, "Training images per fold; several values give a sweep")
        ->delimiter(',');
    eval->add_option("--model", o.model, "Write each fold's model to <model>.fold<i>");
    eval->add_option("--out", o.out, "Output directory for summary.csv and errors.csv");

    auto* sae_cmd = app.add_subcommand("sae", "Sets' Angular Error of an estimator against the ground truths");
    add_manifest(sae_cmd);
    sae_cmd->add_option("--estimator", o.method, "gw|wp|sog")->capture_default_str()->check(method_check);
    sae_cmd->add_option("--p", o.p, "Minkowski power for sog")->capture_default_str()->check(CLI::PositiveNumber);
    sae_cmd->add_option("--out", o.out, "Assignment CSV");

    auto* hist = app.add_subcommand("hist", "Nearest-angle histograms between estimates and ground truths");
    add_manifest(hist);
    hist->add_option("--estimator", o.method, "gw|wp|sog|sweep")->capture_default_str()->check(
        CLI::IsMember({"gw", "wp", "sog", "sweep"}));
    hist->add_option("--p", o.p, "Minkowski power for sog")->capture_default_str()->check(CLI::PositiveNumber);
    hist->add_option("--n", o.n, "Largest power for sweep")->capture_default_str()->check(CLI::PositiveNumber);
    auto* trim_opt = hist->add_option("--trim", o.trim, "Trim the estimates with this fraction first")
                         ->check(CLI::Range(0.0, 0.999999));
    hist->add_option("--seed", o.seed, "Clustering seed for --trim")->needs(trim_opt);
    hist->add_option("--bin-width", o.bin_width, "Bin width in degrees")->capture_default_str()->check(
        CLI::PositiveNumber);
    hist->add_option("--out", o.out, "Output directory for est_to_gt.csv and gt_to_est.csv");

    auto* synth = app.add_subcommand("synth", "Generate a synthetic two-illuminant dataset");
    synth->add_option("--out", o.out, "Output directory")->required();
    synth->add_option("--seed", o.seed, "Generator seed")->required();
    synth->add_option("--count", o.count, "Number of images")->capture_default_str()->check(CLI::PositiveNumber);
    synth->add_option("--pixels", o.pixels, "Pixels per image")->capture_default_str()->check(CLI::PositiveNumber);
    synth->add_option("--separation", o.separation, "Angle between the two modes, degrees")->capture_default_str();
    synth->add_option("--spread", o.spread, "Per-axis spread around each mode, degrees")->capture_default_str();
    synth->add_option("--mix", o.mix, "Probability of the warm mode")->capture_default_str();
    synth->add_option("--gains", o.gains, "Sensor gains r,g,b")->capture_default_str();
    synth->add_option("--noise", o.noise, "Multiplicative pixel noise sigma")->capture_default_str();
    synth->add_option("--scene-cast", o.scene_cast, "Per-image reflectance bias, degrees")->capture_default_str();
    synth->add_option("--outlier-fraction", o.outlier_fraction, "Fraction of heavy-noise images")
        ->capture_default_str();
    synth->add_option("--outlier-noise", o.outlier_noise, "Log-normal noise sigma of those images")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*estimate) {
            if (o.method == "sweep")
                throw Error(ErrorCode::InvalidConfig, "estimate does not support sweep");
            return cmd_estimate(o, out);
        }
        if (*train_ct)
            return cmd_train_ct(o, out);
        if (*apply_ct)
            return cmd_apply_ct(o, out);
        if (*gains)
            return cmd_gains(o, out);
        if (*train_cbt)
            return cmd_train_cbt(o, out);
        if (*apply_cbt)
            return cmd_apply_cbt(o, out);
        if (*eval)
            return cmd_eval(o, out);
        if (*sae_cmd)
            return cmd_sae(o, out);
        if (*hist)
            return cmd_hist(o, out);
        if (*synth)
            return cmd_synth(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        switch (e.category()) {
        case ErrorCategory::Usage: return kExitUsage;
        case ErrorCategory::Numerical: return kExitNumerical;
        case ErrorCategory::Data: return kExitData;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}

} // namespace colortiger::cli
