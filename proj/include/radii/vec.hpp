#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "radii/errors.hpp"

namespace radii {

using Vec = std::vector<double>;

inline bool all_finite(const Vec& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

inline void require_finite(const Vec& v, const char* what) {
    if (!all_finite(v)) throw InputError(std::string(what) + ": non-finite coordinate");
}

inline void require_same_dim(const Vec& a, const Vec& b, const char* what) {
    if (a.size() != b.size()) throw InputError(std::string(what) + ": dimension mismatch");
}

inline double dot(const Vec& a, const Vec& b) {
    require_same_dim(a, b, "dot");
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2sq(const Vec& a) {
    double s = 0;
    for (double x : a) s += x * x;
    return s;
}

inline double norm2(const Vec& a) { return std::sqrt(norm2sq(a)); }

inline double norm1(const Vec& a) {
    double s = 0;
    for (double x : a) s += std::fabs(x);
    return s;
}

inline double norm_inf(const Vec& a) {
    double m = 0;
    for (double x : a) m = std::max(m, std::fabs(x));
    return m;
}

/// l_p norm; p may be +infinity.
inline double lp_norm(const Vec& a, double p) {
    if (std::isinf(p)) return norm_inf(a);
    if (p < 1) throw InputError("lp_norm: p must be >= 1");
    if (p == 1) return norm1(a);
    if (p == 2) return norm2(a);
    // Scale by the max to keep pow() away from overflow/underflow.
    double m = norm_inf(a);
    if (m == 0) return 0;
    double s = 0;
    for (double x : a) s += std::pow(std::fabs(x) / m, p);
    return m * std::pow(s, 1.0 / p);
}

inline Vec zeros(std::size_t n) { return Vec(n, 0.0); }

inline Vec add(const Vec& a, const Vec& b) {
    require_same_dim(a, b, "add");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    require_same_dim(a, b, "sub");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec scaled(const Vec& a, double s) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

inline Vec neg(const Vec& a) { return scaled(a, -1.0); }

inline void add_in_place(Vec& a, const Vec& b) {
    require_same_dim(a, b, "add_in_place");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
}

inline void axpy(Vec& y, double alpha, const Vec& x) {
    require_same_dim(y, x, "axpy");
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

inline double dist2(const Vec& a, const Vec& b) { return norm2(sub(a, b)); }

inline bool approx_equal(const Vec& a, const Vec& b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::fabs(a[i] - b[i]) > tol) return false;
    return true;
}

inline Vec unit_axis(std::size_t n, std::size_t i, double s = 1.0) {
    Vec r(n, 0.0);
    r[i] = s;
    return r;
}

}  // namespace radii
