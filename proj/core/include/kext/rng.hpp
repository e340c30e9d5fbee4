#pragma once

#include <cstdint>
#include <random>

#include "kext/types.hpp"

namespace kext {

/// splitmix64 step; used to derive independent substream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (index + 1));
    return splitmix64(s);
}

inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t index = 0) {
    return std::mt19937_64(substream_seed(seed, index));
}

/// Uniform point on the unit sphere S^{2n-1} of C^n.
inline Vec random_unit_vector(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec v = Vec::zero(n);
    for (int i = 0; i < n; ++i) v[i] = cxd(gauss(rng), gauss(rng));
    return normalized(v);
}

inline cxd random_unit_complex(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double th = 2.0 * 3.14159265358979323846 * u(rng);
    return cxd(std::cos(th), std::sin(th));
}

/// Uniform point in the complex disc of given radius.
inline cxd random_in_disc(std::mt19937_64& rng, double radius) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double r = radius * std::sqrt(u(rng));
    return r * random_unit_complex(rng);
}

}  // namespace kext
