#pragma once

#include <cstdint>
#include <vector>

#include "kext/types.hpp"

namespace kext {

/// Gray-code Sobol sequence, dimensions <= 8 (Joe-Kuo direction numbers),
/// with an optional per-dimension digital-shift scramble derived from seed.
class Sobol {
  public:
    explicit Sobol(int dim, std::uint64_t scramble_seed = 0);

    int dim() const { return dim_; }

    /// Next point, components in (0,1).
    void next(double* out);

    std::vector<double> next_vec() {
        std::vector<double> p(static_cast<size_t>(dim_));
        next(p.data());
        return p;
    }

    /// Skip ahead (generates and discards).
    void discard(std::uint64_t count);

  private:
    int dim_;
    std::uint64_t index_ = 0;
    std::vector<std::array<std::uint32_t, 32>> dirs_;  // per-dim direction numbers
    std::vector<std::uint32_t> state_;                 // current Gray-code accumulators
    std::vector<std::uint32_t> shift_;                 // digital shift per dim
};

/// Inverse of the standard normal CDF (Acklam's rational approximation,
/// refined by one Halley step; ~1e-15 absolute).
double inverse_normal_cdf(double p);

/// Map a Sobol point in (0,1)^{2n} to the unit sphere S^{2n-1} of C^n via
/// componentwise inverse-normal transform and normalization.
Vec sobol_to_unit_sphere(const double* u, int n);

/// Map a Sobol pair (u,v) in (0,1)^2 to the complex disc of given radius.
cxd sobol_to_disc(double u, double v, double radius);

}  // namespace kext
