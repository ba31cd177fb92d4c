#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "orbitatlas/rational.hpp"

namespace orbitatlas {

using Vec = std::vector<Rational>;

inline Rational dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("coordinate mismatch");
    Rational s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("coordinate mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("coordinate mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec scale(const Rational& c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool is_zero(const Vec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

// Solves A x = b exactly by Gaussian elimination. A is m x n given as rows.
// Requires a consistent system; when the solution space is positive
// dimensional the free variables are pinned to zero.
inline Vec solve_linear(std::vector<Vec> a, Vec b) {
    size_t m = a.size(), n = m ? a[0].size() : 0;
    if (b.size() != m) throw std::invalid_argument("solve_linear: shape mismatch");
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t p = row;
        while (p < m && a[p][col].is_zero()) ++p;
        if (p == m) continue;
        std::swap(a[p], a[row]);
        std::swap(b[p], b[row]);
        Rational inv = Rational(1) / a[row][col];
        for (size_t j = col; j < n; ++j) a[row][j] *= inv;
        b[row] *= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            Rational f = a[i][col];
            for (size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
            b[i] -= f * b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (size_t i = row; i < m; ++i)
        if (!b[i].is_zero()) throw std::domain_error("solve_linear: inconsistent system");
    Vec x(n, Rational(0));
    for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
    return x;
}

} // namespace orbitatlas
