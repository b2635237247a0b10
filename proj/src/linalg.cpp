#include "bethe/linalg.hpp"

#include <stdexcept>

namespace bethe {

std::optional<AffineSolution> solve_affine_linear(const RationalMatrix& M, const RationalVector& b) {
    const size_t rows = M.size();
    if (b.size() != rows) throw std::invalid_argument("solve_affine_linear: dimension mismatch");
    const size_t cols = rows == 0 ? 0 : M.front().size();
    for (const auto& row : M)
        if (row.size() != cols) throw std::invalid_argument("solve_affine_linear: ragged matrix");

    // Augmented matrix [M | b], reduced to row echelon form.
    RationalMatrix a(rows, RationalVector(cols + 1));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) a[i][j] = M[i][j];
        a[i][cols] = b[i];
    }

    std::vector<size_t> pivot_col;  // pivot column of each echelon row
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t p = row;
        while (p < rows && a[p][col].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[row]);

        const Rational inv = a[row][col].reciprocal();
        for (size_t j = col; j <= cols; ++j) a[row][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            const Rational f = a[i][col];
            for (size_t j = col; j <= cols; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }

    for (size_t i = row; i < rows; ++i)
        if (!a[i][cols].is_zero()) return std::nullopt;

    AffineSolution sol;
    sol.particular.assign(cols, Rational(0));
    for (size_t r = 0; r < pivot_col.size(); ++r) sol.particular[pivot_col[r]] = a[r][cols];

    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        RationalVector v(cols, Rational(0));
        v[free_col] = Rational(1);
        for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a[r][free_col];
        sol.null_basis.push_back(std::move(v));
    }
    return sol;
}

}  // namespace bethe
