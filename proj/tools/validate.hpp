#pragma once

#include <string>

namespace triq::cli {

// Cross-validation of every closed form against the numeric eigensolver on
// the standard grids: 20x20 over (j, eta) for the single-anisotropy path and
// 15x15 per branch for the two-parameter path. The energy and measure
// deviations are gated (1e-8 / 1e-7); the printed-variant comparisons are
// informational and document where the as-printed piecewise forms deviate
// from the definitional evaluation.
struct ValidateReport {
  double a_energy_dev = 0.0;   // single-anisotropy grid, all 8 energies
  double a_measure_dev = 0.0;  // negativities, t3, mz
  double b_energy_dev[2] = {0.0, 0.0};   // omega = 0.8, 1.2: ground energy
  double b_measure_dev[2] = {0.0, 0.0};  // general closed measures
  double b_literal_dev[2] = {0.0, 0.0};  // piecewise printed branch forms
  double eq_nab_dev = 0.0;       // printed n_ab closed form
  double eq_t3_k2_dev = 0.0;     // printed t3 prefactor variant, /k0^2
  double eq_t3_k4_dev = 0.0;     // printed t3 prefactor variant, /k0^4
  double gated_dev = 0.0;        // max of the gated deviations
  double crossing = 0.0;         // frustrated/nonfrustrated thermal crossing, |j|=2
  int fallback_points = 0;       // grid points where the analytic path declined
                                 //   (must be 0 for the comparison to mean anything)
  bool pass = false;
};

ValidateReport run_validate();

std::string validate_text(const ValidateReport& r);

}  // namespace triq::cli
