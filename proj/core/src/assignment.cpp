// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#include "colortiger/assignment.hpp"

#include <limits>

namespace colortiger {

std::vector<std::size_t> solve_assignment(const CostMatrix& cost)
{
    const std::size_t n = cost.size();
    constexpr double inf = std::numeric_limits<double>::infinity();
    constexpr std::size_t none = 0;

    // 1-based arrays; column 0 is a virtual column used to start each
    // augmenting path. row_of_col[j] is the row matched to column j.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<std::size_t> row_of_col(n + 1, none), way(n + 1, 0);

    for (std::size_t row = 1; row <= n; ++row) {
        row_of_col[0] = row;
        std::size_t col0 = 0;
        std::vector<double> min_slack(n + 1, inf);
        std::vector<char> used(n + 1, 0);
        do {
            used[col0] = 1;
            const std::size_t row0 = row_of_col[col0];
            double delta = inf;
            std::size_t col1 = 0;
            for (std::size_t col = 1; col <= n; ++col) {
                if (used[col])
                    continue;
                const double slack = cost(row0 - 1, col - 1) - u[row0] - v[col];
                if (slack < min_slack[col]) {
                    min_slack[col] = slack;
                    way[col] = col0;
                }
                if (min_slack[col] < delta) {
                    delta = min_slack[col];
                    col1 = col;
                }
            }
            for (std::size_t col = 0; col <= n; ++col) {
                if (used[col]) {
                    u[row_of_col[col]] += delta;
                    v[col] -= delta;
                } else {
                    min_slack[col] -= delta;
                }
            }
            col0 = col1;
        } while (row_of_col[col0] != none);

        // Flip the augmenting path.
        do {
            const std::size_t col1 = way[col0];
            row_of_col[col0] = row_of_col[col1];
            col0 = col1;
        } while (col0 != 0);
    }

    std::vector<std::size_t> col_of_row(n, 0);
    for (std::size_t col = 1; col <= n; ++col)
        col_of_row[row_of_col[col] - 1] = col - 1;
    return col_of_row;
}

double assignment_cost(const CostMatrix& cost, std::span<const std::size_t> col_of_row)
{
    double total = 0.0;
    for (std::size_t i = 0; i < col_of_row.size(); ++i)
        total += cost(i, col_of_row[i]);
    return total;
}

} // namespace colortiger
