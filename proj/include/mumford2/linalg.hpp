#pragma once

#include <vector>

#include "mumford2/rational.hpp"

namespace mumford2 {

struct LinearSolution {
    bool consistent = false;
    bool unique = false;
    std::vector<Rat> x;  // valid only when consistent && unique
};

/// Exact Gaussian elimination on A x = b (A is rows × cols, possibly
/// overdetermined). Reports inconsistency and non-uniqueness.
inline LinearSolution solve_exact(std::vector<std::vector<Rat>> A,
                                  std::vector<Rat> b) {
    const std::size_t rows = A.size();
    const std::size_t cols = rows ? A[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && A[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(A[p], A[r]);
        std::swap(b[p], b[r]);
        Rat inv = A[r][c];
        for (std::size_t j = c; j < cols; ++j) A[r][j] /= inv;
        b[r] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0) continue;
            Rat f = A[i][c];
            for (std::size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    LinearSolution sol;
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return sol;  // 0 = nonzero
    sol.consistent = true;
    if (pivot_col.size() < cols) return sol;  // free variables
    sol.unique = true;
    sol.x.assign(cols, 0);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) sol.x[pivot_col[i]] = b[i];
    return sol;
}

}  // namespace mumford2
