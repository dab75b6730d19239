#pragma once

// Exact rational Gaussian elimination: rank and nullspace. Row-major dense
// matrices; desk-scale sizes only.

#include <vector>

#include "gc/algebra.hpp"

namespace gc {

using Matrix = std::vector<std::vector<Rational>>;

// reduces in place to row echelon form; returns the rank
inline int row_reduce(Matrix& m) {
    if (m.empty()) return 0;
    int rows = int(m.size()), cols = int(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        Rational inv = Rational(1) / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

inline int rank(Matrix m) { return row_reduce(m); }

// basis of the right nullspace {x : m x = 0}
inline Matrix nullspace(Matrix m) {
    if (m.empty()) return {};
    int cols = int(m[0].size());
    row_reduce(m);
    std::vector<int> pivot_col;
    std::vector<char> is_pivot(cols, 0);
    for (const auto& row : m) {
        for (int c = 0; c < cols; ++c)
            if (row[c] != 0) {
                pivot_col.push_back(c);
                is_pivot[c] = 1;
                break;
            }
    }
    Matrix basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, 0);
        v[free] = 1;
        // back-substitute: rows are already fully reduced (RREF)
        for (std::size_t r = 0; r < pivot_col.size(); ++r) {
            // row r: x[pivot_col[r]] + sum_{c>pivot} m[r][c] x[c] = 0
            v[pivot_col[r]] = -m[r][free];
        }
        basis.push_back(v);
    }
    return basis;
}

}  // namespace gc
