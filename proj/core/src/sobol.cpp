#include "kext/sobol.hpp"

#include <cassert>
#include <cmath>

#include "kext/errors.hpp"
#include "kext/rng.hpp"

namespace kext {

namespace {

// First 8 dimensions of the Joe-Kuo (new-joe-kuo-6) table.
struct JoeKuoEntry {
    int s;                // degree of primitive polynomial
    std::uint32_t a;      // polynomial coefficients (interior bits)
    std::uint32_t m[6];   // initial direction integers
};

// dim 1 is the van der Corput sequence; entries below start at dim 2.
constexpr JoeKuoEntry kJoeKuo[] = {
    {1, 0, {1, 0, 0, 0, 0, 0}},
    {2, 1, {1, 3, 0, 0, 0, 0}},
    {3, 1, {1, 3, 1, 0, 0, 0}},
    {3, 2, {1, 1, 1, 0, 0, 0}},
    {4, 1, {1, 1, 3, 3, 0, 0}},
    {4, 4, {1, 3, 5, 13, 0, 0}},
    {5, 2, {1, 1, 5, 5, 17, 0}},
};

constexpr int kBits = 32;

}  // namespace

Sobol::Sobol(int dim, std::uint64_t scramble_seed) : dim_(dim) {
    if (dim < 1 || dim > 8) raise(errc::config_error, "Sobol dimension must be in [1,8]");
    dirs_.resize(static_cast<size_t>(dim));
    state_.assign(static_cast<size_t>(dim), 0u);
    shift_.assign(static_cast<size_t>(dim), 0u);

    for (int d = 0; d < dim; ++d) {
        auto& v = dirs_[static_cast<size_t>(d)];
        if (d == 0) {
            for (int i = 0; i < kBits; ++i) v[static_cast<size_t>(i)] = 1u << (31 - i);
            continue;
        }
        const JoeKuoEntry& e = kJoeKuo[d - 1];
        const int s = e.s;
        for (int i = 0; i < s; ++i) v[static_cast<size_t>(i)] = e.m[i] << (31 - i);
        for (int i = s; i < kBits; ++i) {
            std::uint32_t x = v[static_cast<size_t>(i - s)] ^ (v[static_cast<size_t>(i - s)] >> s);
            for (int k = 1; k < s; ++k)
                if ((e.a >> (s - 1 - k)) & 1u) x ^= v[static_cast<size_t>(i - k)];
            v[static_cast<size_t>(i)] = x;
        }
    }

    if (scramble_seed != 0) {
        std::uint64_t st = scramble_seed;
        for (int d = 0; d < dim; ++d) shift_[static_cast<size_t>(d)] = static_cast<std::uint32_t>(splitmix64(st) >> 32);
    }
}

void Sobol::next(double* out) {
    // position of lowest zero bit of index
    std::uint64_t c = index_++;
    int z = 0;
    while (c & 1u) {
        c >>= 1;
        ++z;
    }
    constexpr double scale = 1.0 / 4294967296.0;  // 2^-32
    for (int d = 0; d < dim_; ++d) {
        state_[static_cast<size_t>(d)] ^= dirs_[static_cast<size_t>(d)][static_cast<size_t>(z)];
        std::uint32_t bits = state_[static_cast<size_t>(d)] ^ shift_[static_cast<size_t>(d)];
        out[d] = (static_cast<double>(bits) + 0.5) * scale;
    }
}

void Sobol::discard(std::uint64_t count) {
    double buf[8];
    for (std::uint64_t i = 0; i < count; ++i) next(buf);
}

double inverse_normal_cdf(double p) {
    // Acklam's rational approximation.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                               1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                               6.680131188771972e+01,  -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                               -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                               3.754408661907416e+00};
    const double plow = 0.02425, phigh = 1 - plow;
    double x;
    if (p < plow) {
        double q = std::sqrt(-2 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
    } else if (p <= phigh) {
        double q = p - 0.5, r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
    } else {
        double q = std::sqrt(-2 * std::log(1 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
    }
    // one Halley refinement
    double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
    double u = e * std::sqrt(2.0 * 3.14159265358979323846) * std::exp(x * x / 2.0);
    x = x - u / (1 + x * u / 2);
    return x;
}

Vec sobol_to_unit_sphere(const double* u, int n) {
    Vec v = Vec::zero(n);
    for (int i = 0; i < n; ++i)
        v[i] = cxd(inverse_normal_cdf(u[2 * i]), inverse_normal_cdf(u[2 * i + 1]));
    return normalized(v);
}

cxd sobol_to_disc(double u, double v, double radius) {
    double r = radius * std::sqrt(u);
    double th = 2.0 * 3.14159265358979323846 * v;
    return cxd(r * std::cos(th), r * std::sin(th));
}

}  // namespace kext
