#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace kext {

using cxd = std::complex<double>;

/// Ambient point / vector in C^n, n in {2,3}. Fixed capacity, no allocation.
struct Vec {
    int n = 2;
    std::array<cxd, 3> c{};

    Vec() = default;
    Vec(cxd a, cxd b) : n(2), c{a, b, cxd{}} {}
    Vec(cxd a, cxd b, cxd d) : n(3), c{a, b, d} {}

    static Vec zero(int dim) {
        Vec v;
        v.n = dim;
        return v;
    }

    cxd& operator[](int i) { return c[static_cast<size_t>(i)]; }
    const cxd& operator[](int i) const { return c[static_cast<size_t>(i)]; }

    friend Vec operator+(const Vec& a, const Vec& b) {
        Vec r = a;
        for (int i = 0; i < a.n; ++i) r[i] += b[i];
        return r;
    }
    friend Vec operator-(const Vec& a, const Vec& b) {
        Vec r = a;
        for (int i = 0; i < a.n; ++i) r[i] -= b[i];
        return r;
    }
    friend Vec operator*(cxd s, const Vec& a) {
        Vec r = a;
        for (int i = 0; i < a.n; ++i) r[i] *= s;
        return r;
    }
};

using Point = Vec;

/// Hermitian inner product <u,w> = sum u_i * conj(w_i).
inline cxd hdot(const Vec& u, const Vec& w) {
    cxd s = 0.0;
    for (int i = 0; i < u.n; ++i) s += u[i] * std::conj(w[i]);
    return s;
}

/// Bilinear pairing <u,w> = sum u_i * w_i (used by the kernel forms).
inline cxd bdot(const Vec& u, const Vec& w) {
    cxd s = 0.0;
    for (int i = 0; i < u.n; ++i) s += u[i] * w[i];
    return s;
}

inline double norm2sq(const Vec& u) {
    double s = 0.0;
    for (int i = 0; i < u.n; ++i) s += std::norm(u[i]);
    return s;
}

inline double norm2(const Vec& u) { return std::sqrt(norm2sq(u)); }

inline Vec normalized(const Vec& u) {
    double m = norm2(u);
    Vec r = u;
    for (int i = 0; i < u.n; ++i) r[i] /= m;
    return r;
}

inline double dist2(const Vec& a, const Vec& b) { return norm2(a - b); }

}  // namespace kext
