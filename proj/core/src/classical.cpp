#include "triq/classical.hpp"

#include <cmath>

#include "triq/error.hpp"

namespace triq {

double classical_xy_energy(const std::array<double, 3>& thetas,
                           const std::array<double, 3>& couplings) {
  for (double x : thetas)
    if (!std::isfinite(x)) fail(errc::invalid_parameter, "non-finite angle");
  for (double x : couplings)
    if (!std::isfinite(x)) fail(errc::invalid_parameter, "non-finite coupling");
  return -(couplings[0] * std::cos(thetas[0] - thetas[1]) +
           couplings[1] * std::cos(thetas[1] - thetas[2]) +
           couplings[2] * std::cos(thetas[2] - thetas[0]));
}

ClassicalGround classical_ground_search(const std::array<double, 3>& couplings,
                                        int resolution) {
  if (resolution < 8) fail(errc::invalid_parameter, "resolution must be >= 8");
  constexpr double two_pi = 6.283185307179586;
  auto energy_bc = [&](double tb, double tc) {
    return classical_xy_energy({0.0, tb, tc}, couplings);
  };

  ClassicalGround best;
  best.energy = energy_bc(0.0, 0.0);
  const double step = two_pi / resolution;
  for (int ib = 0; ib < resolution; ++ib) {
    const double tb = ib * step;
    for (int ic = 0; ic < resolution; ++ic) {
      const double tc = ic * step;
      const double e = energy_bc(tb, tc);
      if (e < best.energy) best = {{0.0, tb, tc}, e};
    }
  }

  // One refinement pass: +- one coarse cell around the incumbent at 10x
  // density.
  const double fine = step / 10.0;
  const double b0 = best.thetas[1], c0 = best.thetas[2];
  for (int ib = -10; ib <= 10; ++ib) {
    const double tb = b0 + ib * fine;
    for (int ic = -10; ic <= 10; ++ic) {
      const double tc = c0 + ic * fine;
      const double e = energy_bc(tb, tc);
      if (e < best.energy) best = {{0.0, tb, tc}, e};
    }
  }
  // Report angles wrapped into [0, 2pi).
  for (double& t : best.thetas) {
    t = std::fmod(t, two_pi);
    if (t < 0.0) t += two_pi;
  }
  return best;
}

}  // namespace triq
