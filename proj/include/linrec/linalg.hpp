#pragma once

#include <cstddef>
#include <vector>

#include "linrec/scalar.hpp"

namespace linrec {

using Matrix = std::vector<std::vector<GaussianRational>>;

/// Solve a square system A x = b by fraction-free (Bareiss) elimination.
/// Throws verification_failure on a singular matrix: every caller passes a
/// provably invertible system, so singularity signals a bug.
inline std::vector<GaussianRational> fraction_free_solve(Matrix a, std::vector<GaussianRational> b) {
    const std::size_t n = a.size();
    GaussianRational prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k].is_zero()) ++pivot;
        if (pivot == n) throw verification_failure("singular linear system");
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            std::swap(b[pivot], b[k]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            b[i] = (a[k][k] * b[i] - a[i][k] * b[k]) / prev;
            a[i][k] = GaussianRational();
        }
        prev = a[k][k];
    }
    std::vector<GaussianRational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        if (a[i][i].is_zero()) throw verification_failure("singular linear system");
        GaussianRational acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
        x[i] = acc / a[i][i];
    }
    return x;
}

/// Whether the (possibly rectangular) system A x = b is consistent,
/// by Gaussian elimination over Q(i).
inline bool is_consistent(Matrix a, std::vector<GaussianRational> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::size_t rank_row = 0;
    for (std::size_t col = 0; col < cols && rank_row < rows; ++col) {
        std::size_t pivot = rank_row;
        while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank_row) {
            std::swap(a[pivot], a[rank_row]);
            std::swap(b[pivot], b[rank_row]);
        }
        GaussianRational inv = GaussianRational(1) / a[rank_row][col];
        for (std::size_t i = rank_row + 1; i < rows; ++i) {
            if (a[i][col].is_zero()) continue;
            GaussianRational factor = a[i][col] * inv;
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= factor * a[rank_row][j];
            b[i] -= factor * b[rank_row];
        }
        ++rank_row;
    }
    for (std::size_t i = rank_row; i < rows; ++i)
        if (!b[i].is_zero()) return false;
    return true;
}

} // namespace linrec
