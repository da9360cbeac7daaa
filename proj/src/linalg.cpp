#include "freeline/linalg.hpp"

#include <limits>

namespace freeline {

std::vector<int> ExactEchelon::free_cols() const {
    std::vector<int> out;
    for (std::size_t c = 0; c < pivot_of_col.size(); ++c)
        if (pivot_of_col[c] < 0) out.push_back(static_cast<int>(c));
    return out;
}

std::vector<ExactRow> ExactEchelon::kernel_basis(const FieldSpec& field) const {
    std::vector<ExactRow> out;
    for (int f : free_cols()) {
        ExactRow v(pivot_of_col.size(), field.zero());
        v[static_cast<std::size_t>(f)] = field.one();
        for (std::size_t r = 0; r < pivot_cols.size(); ++r)
            v[static_cast<std::size_t>(pivot_cols[r])] = -rows[r][static_cast<std::size_t>(f)];
        out.push_back(std::move(v));
    }
    return out;
}

ExactEchelon exact_rref(std::vector<ExactRow> rows, std::size_t cols) {
    ExactEchelon e;
    e.pivot_of_col.assign(cols, -1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t best = rows.size();
        std::size_t best_size = std::numeric_limits<std::size_t>::max();
        for (std::size_t r = rank; r < rows.size(); ++r) {
            if (rows[r][c].is_zero()) continue;
            const std::size_t s = rows[r][c].bit_size();
            if (s < best_size) {
                best = r;
                best_size = s;
            }
        }
        if (best == rows.size()) continue;
        std::swap(rows[rank], rows[best]);
        ExactRow& piv = rows[rank];
        const FieldElem inv = piv[c].inverse();
        for (std::size_t j = c; j < cols; ++j)
            if (!piv[j].is_zero()) piv[j] *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c].is_zero()) continue;
            const FieldElem f = rows[r][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!piv[j].is_zero()) rows[r][j] -= f * piv[j];
        }
        e.pivot_of_col[c] = static_cast<int>(rank);
        e.pivot_cols.push_back(static_cast<int>(c));
        ++rank;
    }
    rows.resize(rank);
    e.rows = std::move(rows);
    return e;
}

}  // namespace freeline
