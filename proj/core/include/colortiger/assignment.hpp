// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace colortiger {

/// Dense square cost matrix, row-major.
class CostMatrix {
public:
    explicit CostMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

    std::size_t size() const { return n_; }
    double& operator()(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }
    double operator()(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }

private:
    std::size_t n_;
    std::vector<double> data_;
};

/// Exact minimum-cost perfect matching (Hungarian method with row/column
/// potentials, O(n^3)). Returns col_of_row: row i is matched to column
/// col_of_row[i].
std::vector<std::size_t> solve_assignment(const CostMatrix& cost);

/// Sum of cost(i, col_of_row[i]).
double assignment_cost(const CostMatrix& cost, std::span<const std::size_t> col_of_row);

} // namespace colortiger
