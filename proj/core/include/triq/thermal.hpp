#pragma once

#include <array>
#include <vector>

#include "triq/density.hpp"
#include "triq/model.hpp"

namespace triq {

// Thermal equilibrium of the triangle at temperature T (k_B = 1):
// rho(T) = sum_i e^{-E_i/T} |e_i><e_i| / Z, evaluated from the numeric
// spectrum with energies shifted by E_0 before exponentiation so low
// temperatures never overflow.

struct ThermalPoint {
  double temperature = 0.0;
  std::array<double, 8> weights{};  // Boltzmann probabilities, ascending-energy order
  DensityMatrix rho;
};

// T = 0 returns the ground projector, or the equal mixture over the
// degenerate ground space when the gap is below degeneracy_tol. Negative
// temperature throws errc::invalid_parameter.
ThermalPoint gibbs_state(const Spectrum& spectrum, double temperature,
                         double degeneracy_tol = 1e-9);

// T3 of the Gibbs state under the mixed-state extension (same negativity
// combination as the pure-state definition).
double thermal_t3(const CouplingConfig& config, double temperature, char central = 'B');

// T3(0) - T3(temperature): the drop from the ground-state value at finite
// temperature. Requires temperature > 0.
double robustness_delta(const CouplingConfig& config, double temperature,
                        char central = 'B');

// Curve grid resolving the steep low-T decay: the first max(2, 3*count/10)
// points geometric from 1e-3 to min(0.1, tmax/2), the rest linear up to tmax.
// count >= 2, tmax > 1e-3.
std::vector<double> temperature_grid(double tmax, int count);

// Temperature where the frustrated (+|j|) and nonfrustrated (-|j|) thermal T3
// curves cross, located by bisection of the difference on [tlo, thi]. Returns
// the bracket midpoint once narrower than 1e-6; throws errc::numeric_convergence
// when the difference does not change sign over the interval.
double thermal_crossing(double j_magnitude, double eta, double omega, double tlo,
                        double thi, char central = 'B');

}  // namespace triq
