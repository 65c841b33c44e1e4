#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "radii/vec.hpp"

namespace radii::detail {

using Matrix = std::vector<Vec>;  // row-major

/// Solve A x = b for square A by LU with partial pivoting.
/// Returns nullopt on (numerical) singularity.
inline std::optional<Vec> solve_square(Matrix a, Vec b, double pivot_tol = 1e-12) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
        if (std::fabs(a[piv][col]) <= pivot_tol) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        const double inv = 1.0 / a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] * inv;
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    Vec x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
        x[i] = s / a[i][i];
    }
    return x;
}

/// A nonzero v with M v ~ 0 for a rows x cols matrix with cols > rank,
/// found by row echelon reduction; empty vector if M has full column rank.
inline Vec null_vector(Matrix m, double tol = 1e-10) {
    if (m.empty()) return {};
    const std::size_t rows = m.size(), cols = m[0].size();
    std::vector<std::size_t> pivot_col_of_row;
    std::vector<bool> is_pivot(cols, false);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = r;
        for (std::size_t i = r + 1; i < rows; ++i)
            if (std::fabs(m[i][c]) > std::fabs(m[best][c])) best = i;
        if (std::fabs(m[best][c]) <= tol) continue;
        std::swap(m[best], m[r]);
        const double inv = 1.0 / m[r][c];
        for (std::size_t cc = c; cc < cols; ++cc) m[r][cc] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const double f = m[i][c];
            if (f == 0.0) continue;
            for (std::size_t cc = c; cc < cols; ++cc) m[i][cc] -= f * m[r][cc];
        }
        is_pivot[c] = true;
        pivot_col_of_row.push_back(c);
        ++r;
    }
    std::size_t free_col = cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    if (free_col == cols) return {};
    Vec v(cols, 0.0);
    v[free_col] = 1.0;
    for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i)
        v[pivot_col_of_row[i]] = -m[i][free_col];
    return v;
}

/// Numerical rank of a set of vectors via modified Gram-Schmidt.
inline int rank_of(const std::vector<Vec>& vectors, double tol = 1e-9) {
    std::vector<Vec> basis;
    for (const Vec& v : vectors) {
        Vec w = v;
        for (const Vec& b : basis) axpy(w, -dot(w, b), b);
        const double nw = norm2(w);
        if (nw > tol * std::max(1.0, norm2(v))) basis.push_back(scaled(w, 1.0 / nw));
    }
    return static_cast<int>(basis.size());
}

/// Orthonormal basis completing `seed` columns to n vectors (Gram-Schmidt
/// against coordinate axes); deterministic.
inline std::vector<Vec> orthonormal_completion(std::vector<Vec> basis, std::size_t n) {
    for (std::size_t k = 0; k < n && basis.size() < n; ++k) {
        Vec w = unit_axis(n, k);
        for (const Vec& b : basis) axpy(w, -dot(w, b), b);
        const double nw = norm2(w);
        if (nw > 1e-8) basis.push_back(scaled(w, 1.0 / nw));
    }
    return basis;
}

}  // namespace radii::detail
