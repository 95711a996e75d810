#include "grd/linsolve.hpp"

namespace grd {

std::optional<LinearSolution> solve_linear_exact(std::vector<std::vector<Rational>> rows,
                                                 std::vector<Rational> rhs) {
    const std::size_t nrows = rows.size();
    if (rhs.size() != nrows) throw DomainError("rhs size does not match row count");
    std::size_t ncols = nrows == 0 ? 0 : rows[0].size();
    for (const auto& row : rows)
        if (row.size() != ncols) throw DomainError("ragged coefficient rows");

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t pivot = rank;
        while (pivot < nrows && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == nrows) continue;
        std::swap(rows[pivot], rows[rank]);
        std::swap(rhs[pivot], rhs[rank]);

        Rational inv = rows[rank][col].inverse();
        for (std::size_t c = col; c < ncols; ++c) rows[rank][c] *= inv;
        rhs[rank] *= inv;

        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            Rational factor = rows[r][col];
            for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= factor * rows[rank][c];
            rhs[r] -= factor * rhs[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }

    for (std::size_t r = rank; r < nrows; ++r)
        if (!rhs[r].is_zero()) return std::nullopt;

    LinearSolution sol;
    sol.values.assign(ncols, Rational(0));
    for (std::size_t i = 0; i < rank; ++i) sol.values[pivot_col[i]] = rhs[i];
    sol.free_count = ncols - rank;
    return sol;
}

}  // namespace grd
