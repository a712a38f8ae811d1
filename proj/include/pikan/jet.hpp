#pragma once

// Second-order forward jets: value, gradient and (packed symmetric) Hessian
// of a scalar quantity with respect to the network inputs. Dimension is 1 or
// 2 and fixed for the lifetime of an evaluation. All arithmetic is double.

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace pikan::ad {

inline constexpr int kMaxDim = 2;

// Packed upper-triangle index: d=1 -> {00}; d=2 -> {00, 01, 11}.
constexpr int hess_count(int dim) { return dim * (dim + 1) / 2; }

constexpr int hess_index(int i, int j) {
    // valid for dim <= 2
    return (i > j) ? hess_index(j, i) : (i + j);
}

struct Jet2 {
    double v = 0.0;
    std::array<double, kMaxDim> g{0.0, 0.0};
    std::array<double, 3> h{0.0, 0.0, 0.0};
    int dim = 1;

    double hess(int i, int j) const { return h[static_cast<std::size_t>(hess_index(i, j))]; }

    void set_zero() {
        v = 0.0;
        g = {0.0, 0.0};
        h = {0.0, 0.0, 0.0};
    }
};

inline void require_dim(int d) {
    if (d < 1 || d > kMaxDim) throw std::invalid_argument("jet dimension must be 1 or 2");
}

inline void require_same_dim(const Jet2& a, const Jet2& b) {
    if (a.dim != b.dim) throw std::invalid_argument("jet dimension mismatch");
}

inline Jet2 jet_const(double c, int dim) {
    require_dim(dim);
    Jet2 j;
    j.v = c;
    j.dim = dim;
    return j;
}

// Independent variable: unit first derivative along `axis`, zero curvature.
inline Jet2 jet_seed(double x, int axis, int dim) {
    require_dim(dim);
    if (axis < 0 || axis >= dim) throw std::out_of_range("jet seed axis out of range");
    Jet2 j;
    j.v = x;
    j.dim = dim;
    j.g[static_cast<std::size_t>(axis)] = 1.0;
    return j;
}

inline Jet2 jet_add(const Jet2& a, const Jet2& b) {
    require_same_dim(a, b);
    Jet2 r = a;
    r.v += b.v;
    for (int i = 0; i < a.dim; ++i) r.g[i] += b.g[i];
    for (int i = 0; i < hess_count(a.dim); ++i) r.h[i] += b.h[i];
    return r;
}

inline Jet2 jet_sub(const Jet2& a, const Jet2& b) {
    require_same_dim(a, b);
    Jet2 r = a;
    r.v -= b.v;
    for (int i = 0; i < a.dim; ++i) r.g[i] -= b.g[i];
    for (int i = 0; i < hess_count(a.dim); ++i) r.h[i] -= b.h[i];
    return r;
}

// Product rule through second order.
inline Jet2 jet_mul(const Jet2& a, const Jet2& b) {
    require_same_dim(a, b);
    Jet2 r;
    r.dim = a.dim;
    r.v = a.v * b.v;
    for (int i = 0; i < a.dim; ++i) r.g[i] = a.g[i] * b.v + a.v * b.g[i];
    for (int i = 0; i < a.dim; ++i)
        for (int j = i; j < a.dim; ++j) {
            const int p = hess_index(i, j);
            r.h[p] = a.h[p] * b.v + a.g[i] * b.g[j] + a.g[j] * b.g[i] + a.v * b.h[p];
        }
    return r;
}

inline Jet2 jet_scale(const Jet2& a, double c) {
    Jet2 r = a;
    r.v *= c;
    for (int i = 0; i < a.dim; ++i) r.g[i] *= c;
    for (int i = 0; i < hess_count(a.dim); ++i) r.h[i] *= c;
    return r;
}

inline Jet2 jet_shift(const Jet2& a, double c) {
    Jet2 r = a;
    r.v += c;
    return r;
}

// Composition with a univariate function given f(v), f'(v), f''(v).
inline Jet2 jet_compose(const Jet2& a, double f0, double f1, double f2) {
    Jet2 r;
    r.dim = a.dim;
    r.v = f0;
    for (int i = 0; i < a.dim; ++i) r.g[i] = f1 * a.g[i];
    for (int i = 0; i < a.dim; ++i)
        for (int j = i; j < a.dim; ++j) {
            const int p = hess_index(i, j);
            r.h[p] = f2 * a.g[i] * a.g[j] + f1 * a.h[p];
        }
    return r;
}

// F: double -> std::array<double,3> supplying {f, f', f''} at a.v.
template <class F>
Jet2 jet_unary(const Jet2& a, F&& f) {
    const std::array<double, 3> d = f(a.v);
    return jet_compose(a, d[0], d[1], d[2]);
}

inline Jet2 jet_sin(const Jet2& a) { return jet_compose(a, std::sin(a.v), std::cos(a.v), -std::sin(a.v)); }
inline Jet2 jet_cos(const Jet2& a) { return jet_compose(a, std::cos(a.v), -std::sin(a.v), -std::cos(a.v)); }
inline Jet2 jet_exp(const Jet2& a) {
    const double e = std::exp(a.v);
    return jet_compose(a, e, e, e);
}

inline Jet2 operator+(const Jet2& a, const Jet2& b) { return jet_add(a, b); }
inline Jet2 operator-(const Jet2& a, const Jet2& b) { return jet_sub(a, b); }
inline Jet2 operator*(const Jet2& a, const Jet2& b) { return jet_mul(a, b); }
inline Jet2 operator*(double c, const Jet2& a) { return jet_scale(a, c); }
inline Jet2 operator*(const Jet2& a, double c) { return jet_scale(a, c); }
inline Jet2 operator+(const Jet2& a, double c) { return jet_shift(a, c); }
inline Jet2 operator+(double c, const Jet2& a) { return jet_shift(a, c); }
inline Jet2 operator-(const Jet2& a, double c) { return jet_shift(a, -c); }
inline Jet2 operator-(double c, const Jet2& a) { return jet_shift(jet_scale(a, -1.0), c); }

inline bool jet_finite(const Jet2& a) {
    if (!std::isfinite(a.v)) return false;
    for (int i = 0; i < a.dim; ++i)
        if (!std::isfinite(a.g[i])) return false;
    for (int i = 0; i < hess_count(a.dim); ++i)
        if (!std::isfinite(a.h[i])) return false;
    return true;
}

}  // namespace pikan::ad
