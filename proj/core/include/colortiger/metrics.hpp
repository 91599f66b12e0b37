// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#pragma once

#include "colortiger/color.hpp"

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace colortiger {

/// Angular error statistics in degrees.
struct ErrorSummary {
    double mean = 0.0;
    double median = 0.0;
    double trimean = 0.0;
    double best25 = 0.0;
    double worst25 = 0.0;
    double avg = 0.0; ///< geometric mean of the five statistics above
    std::size_t count = 0;
};

/// Summary statistics of a set of angular errors.
///
/// - median: middle element, or mean of the middle pair for even counts
/// - trimean: (Q1 + 2 Q2 + Q3) / 4 with quartiles linearly interpolated at
///   position (N - 1) q of the sorted errors
/// - best25 / worst25: mean of the max(1, floor(N/4)) smallest / largest
///
/// Throws EmptyInput, NegativeError (also for NaN).
ErrorSummary summarize(std::span<const double> errors);

/// Geometric mean of mean, median, trimean, best25 and worst25.
double geometric_mean_of_stats(double mean, double median, double trimean, double best25, double worst25);

/// Linearly interpolated quantile of sorted data at position (N - 1) q.
double interpolated_quantile(std::span<const double> sorted, double q);

/// Per-pair angular errors in degrees. Throws LengthMismatch.
std::vector<double> angular_errors(std::span<const Illuminant> estimates, std::span<const Illuminant> truths);

struct SaeResult {
    double mean_angle = 0.0; ///< degrees
    /// est_of_gt[i] is the estimate paired with ground truth i.
    std::vector<std::size_t> est_of_gt;
};

/// Sets' Angular Error: the smallest mean angle over all one-to-one
/// pairings of the two sets, solved exactly as an assignment problem.
/// Throws EmptyInput, LengthMismatch.
SaeResult sae(std::span<const Illuminant> gts, std::span<const Illuminant> ests);

struct AngleHistogram {
    double bin_width = 0.25;
    /// percent[i] covers [i * bin_width, (i + 1) * bin_width).
    std::vector<double> percent;

    double bin_start(std::size_t i) const { return static_cast<double>(i) * bin_width; }
    double bin_end(std::size_t i) const { return static_cast<double>(i + 1) * bin_width; }
};

/// Angle from every element of `from_set` to its nearest element of `to_set`.
std::vector<double> nearest_angles(std::span<const Illuminant> from_set, std::span<const Illuminant> to_set);

/// Histogram of nearest_angles, as percentages of |from_set|. Not symmetric
/// in its arguments. Throws EmptyInput, InvalidConfig for bin_width <= 0.
AngleHistogram nearest_angle_histogram(std::span<const Illuminant> from_set,
                                       std::span<const Illuminant> to_set, double bin_width);

struct SummaryRow {
    std::string method;
    ErrorSummary summary;
};

/// CSV with header method,mean,median,trimean,best25,worst25,avg,count.
/// `precision` is the number of decimals; negative means 17 significant digits.
void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows, int precision = -1);
/// Fixed-width human-readable table, four decimals.
void write_summary_table(std::ostream& out, std::span<const SummaryRow> rows);
/// CSV with header bin_start,bin_end,percent.
void write_histogram_csv(std::ostream& out, const AngleHistogram& hist);

} // namespace colortiger
