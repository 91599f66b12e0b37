// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#include "colortiger/metrics.hpp"

#include "colortiger/assignment.hpp"
#include "colortiger/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

namespace colortiger {

namespace {

double mean_of(std::span<const double> v)
{
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

std::string real(double v, int precision)
{
    return precision < 0 ? fmt::format("{:.17g}", v) : fmt::format("{:.{}f}", v, precision);
}

} // namespace

double interpolated_quantile(std::span<const double> sorted, double q)
{
    const double pos = static_cast<double>(sorted.size() - 1) * q;
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

double geometric_mean_of_stats(double mean, double median, double trimean, double best25, double worst25)
{
    return std::pow(mean * median * trimean * best25 * worst25, 1.0 / 5.0);
}

ErrorSummary summarize(std::span<const double> errors)
{
    if (errors.empty())
        throw Error(ErrorCode::EmptyInput, "no errors to summarize");
    for (double e : errors) {
        if (!(e >= 0.0))
            throw Error(ErrorCode::NegativeError, fmt::format("angular error {} is negative or NaN", e));
    }

    std::vector<double> sorted(errors.begin(), errors.end());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    const std::span<const double> s(sorted);

    ErrorSummary out;
    out.count = n;
    out.mean = mean_of(s);
    out.median = n % 2 == 1 ? s[n / 2] : 0.5 * (s[n / 2 - 1] + s[n / 2]);
    out.trimean = 0.25 * (interpolated_quantile(s, 0.25) + 2.0 * interpolated_quantile(s, 0.5)
                          + interpolated_quantile(s, 0.75));
    const std::size_t quarter = std::max<std::size_t>(1, n / 4);
    out.best25 = mean_of(s.first(quarter));
    out.worst25 = mean_of(s.last(quarter));
    out.avg = geometric_mean_of_stats(out.mean, out.median, out.trimean, out.best25, out.worst25);
    return out;
}

std::vector<double> angular_errors(std::span<const Illuminant> estimates, std::span<const Illuminant> truths)
{
    if (estimates.size() != truths.size())
        throw Error(ErrorCode::LengthMismatch, "estimate and ground-truth counts differ");
    std::vector<double> out(estimates.size());
    for (std::size_t i = 0; i < estimates.size(); ++i)
        out[i] = angular_distance(estimates[i], truths[i]);
    return out;
}

SaeResult sae(std::span<const Illuminant> gts, std::span<const Illuminant> ests)
{
    if (gts.size() != ests.size())
        throw Error(ErrorCode::LengthMismatch,
                    fmt::format("SAE needs equal set sizes, got {} and {}", gts.size(), ests.size()));
    if (gts.empty())
        throw Error(ErrorCode::EmptyInput, "SAE of empty sets");

    const std::size_t m = gts.size();
    CostMatrix cost(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j)
            cost(i, j) = angular_distance(gts[i], ests[j]);
    }

    SaeResult out;
    out.est_of_gt = solve_assignment(cost);
    out.mean_angle = assignment_cost(cost, out.est_of_gt) / static_cast<double>(m);
    return out;
}

std::vector<double> nearest_angles(std::span<const Illuminant> from_set, std::span<const Illuminant> to_set)
{
    if (from_set.empty() || to_set.empty())
        throw Error(ErrorCode::EmptyInput, "nearest angles need two non-empty sets");
    std::vector<double> out(from_set.size());
    for (std::size_t i = 0; i < from_set.size(); ++i) {
        double best = angular_distance(from_set[i], to_set[0]);
        for (std::size_t j = 1; j < to_set.size(); ++j)
            best = std::min(best, angular_distance(from_set[i], to_set[j]));
        out[i] = best;
    }
    return out;
}

AngleHistogram nearest_angle_histogram(std::span<const Illuminant> from_set,
                                       std::span<const Illuminant> to_set, double bin_width)
{
    if (!(bin_width > 0.0))
        throw Error(ErrorCode::InvalidConfig, "histogram bin width must be positive");
    const std::vector<double> angles = nearest_angles(from_set, to_set);

    AngleHistogram hist;
    hist.bin_width = bin_width;
    std::vector<std::size_t> counts;
    for (double a : angles) {
        const auto bin = static_cast<std::size_t>(std::floor(a / bin_width));
        if (bin >= counts.size())
            counts.resize(bin + 1, 0);
        ++counts[bin];
    }
    const double scale = 100.0 / static_cast<double>(angles.size());
    hist.percent.reserve(counts.size());
    for (std::size_t c : counts)
        hist.percent.push_back(static_cast<double>(c) * scale);
    return hist;
}

void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows, int precision)
{
    out << "method,mean,median,trimean,best25,worst25,avg,count\n";
    for (const auto& row : rows) {
        const auto& s = row.summary;
        out << row.method << ',' << real(s.mean, precision) << ',' << real(s.median, precision) << ','
            << real(s.trimean, precision) << ',' << real(s.best25, precision) << ','
            << real(s.worst25, precision) << ',' << real(s.avg, precision) << ',' << s.count << '\n';
    }
}

void write_summary_table(std::ostream& out, std::span<const SummaryRow> rows)
{
    std::size_t width = 6;
    for (const auto& row : rows)
        width = std::max(width, row.method.size());
    out << fmt::format("{:<{}}  {:>8}  {:>8}  {:>8}  {:>8}  {:>8}  {:>8}  {:>6}\n", "method", width, "mean",
                       "median", "trimean", "best25", "worst25", "avg", "count");
    for (const auto& row : rows) {
        const auto& s = row.summary;
        out << fmt::format("{:<{}}  {:>8.4f}  {:>8.4f}  {:>8.4f}  {:>8.4f}  {:>8.4f}  {:>8.4f}  {:>6}\n",
                           row.method, width, s.mean, s.median, s.trimean, s.best25, s.worst25, s.avg,
                           s.count);
    }
}

void write_histogram_csv(std::ostream& out, const AngleHistogram& hist)
{
    out << "bin_start,bin_end,percent\n";
    for (std::size_t i = 0; i < hist.percent.size(); ++i) {
        out << fmt::format("{:.17g},{:.17g},{:.17g}\n", hist.bin_start(i), hist.bin_end(i), hist.percent[i]);
    }
}

} // namespace colortiger
