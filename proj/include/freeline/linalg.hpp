#pragma once

// Exact Gaussian elimination over a FieldSpec.

#include <vector>

#include "freeline/exactfield.hpp"

namespace freeline {

using ExactRow = std::vector<FieldElem>;

struct ExactEchelon {
    /// Reduced rows, pivot entries equal to one.
    std::vector<ExactRow> rows;
    std::vector<int> pivot_cols;
    std::vector<int> pivot_of_col;

    int rank() const { return static_cast<int>(pivot_cols.size()); }
    std::vector<int> free_cols() const;
    /// Right-kernel vectors, one per free column, with a 1 in that column.
    std::vector<ExactRow> kernel_basis(const FieldSpec& field) const;
};

/// Row-reduces `rows` (all of length `cols`). Among the candidate rows of a
/// column the pivot with the smallest bit size wins, ties broken by row
/// order, so the result is deterministic.
ExactEchelon exact_rref(std::vector<ExactRow> rows, std::size_t cols);

}  // namespace freeline
