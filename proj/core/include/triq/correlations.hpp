#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triq/density.hpp"
#include "triq/model.hpp"

namespace triq {

// Correlation measures for the three-qubit ground problem: negativities,
// the tripartite residual T3, and the two finite-difference susceptibilities
// (dT3/dj and d<sum sigma^z>/dj) used to discriminate the frustrated from the
// nonfrustrated regime.

// Negativity ||rho^{T_s}||_1 - 1 = 2 sum |negative eigenvalues| of the partial
// transpose over the subsystem with label `transposed`. Eigenvalues in
// [-1e-12, 0] are treated as zero so PPT states report exactly 0.
double negativity(const DensityMatrix& rho, char transposed);

// Tripartite measure sqrt(max(0, N_{c|rest}^2 - N_{c,x}^2 - N_{c,y}^2)) with
// central qubit label `central`. The amplitude overload evaluates the
// one-vs-rest negativity through the Schmidt determinant of the central
// qubit's reduced state (2 sqrt det rho_c, exact for pure states); the
// density-matrix overload applies the identical combination of mixed-state
// negativities, which is the extension used for thermal states.
double t3(const std::array<double, 8>& amplitudes, char central);
double t3(const DensityMatrix& rho, char central);

// A finite-difference result; one_sided marks the forward-difference fallback
// taken when the derivative is requested exactly at the critical point j = 0.
struct FdValue {
  double value = 0.0;
  bool one_sided = false;
};

// Default step 1e-4 * max(1, |j|); callers shrink it further so j +- step
// never crosses zero.
double default_fd_step(double j);

// chi^{T3}: central difference [T3(j+d) - T3(j-d)]/(2d) of the ground-state
// T3 at fixed (h, eta, omega). j = 0 falls back to a flagged forward
// difference; 0 < |j| <= step shrinks the step to |j|/2. numeric_only skips
// the closed-form evaluation path.
FdValue mqc_susceptibility(const CouplingConfig& config, char central, double step,
                           bool numeric_only = false);

// chi^M: same differencing applied to <psi0| sum_i sigma^z_i |psi0> (the
// z-component is the field direction; <sigma^x> and <sigma^y> vanish for the
// gauge-fixed real ground state).
FdValue magnetic_susceptibility(const CouplingConfig& config, double step,
                                bool numeric_only = false);

enum class Regime { frustrated, nonfrustrated, indeterminate };

const char* regime_name(Regime r);

// Sign-of-chi classification with a dead band: chi > +tau -> frustrated,
// chi < -tau -> nonfrustrated, |chi| <= tau -> indeterminate unless a sign
// hint for j breaks the tie (positive hint -> frustrated, negative ->
// nonfrustrated). t3 is carried for context and does not enter the rule.
Regime classify_regime(double t3, double chi_t3,
                       std::optional<int> j_sign_hint = std::nullopt,
                       double dead_band = 1e-3);

// Everything the CLI prints for one configuration. `path` records which
// evaluation produced the state measures ("analytic" or "numeric"); flags
// collect "numeric-fallback" (a closed form existed but degenerated at this
// point) and "one-sided-fd" (susceptibilities differenced at j = 0).
struct CorrelationReport {
  double n_a_bc = 0.0, n_b_ac = 0.0, n_c_ab = 0.0;
  double n_ab = 0.0, n_ac = 0.0, n_bc = 0.0;
  double t3_central_a = 0.0, t3_central_b = 0.0, t3_central_c = 0.0;
  double chi_t3 = 0.0, chi_m = 0.0;
  char central = 'B';
  std::string path;
  std::vector<std::string> flags;
};

// Analytic-first evaluation: closed forms serve h = 1 with omega = 1 (single
// anisotropy) or omega in {0.8, 1.2} (two-parameter branches); every other
// configuration, and any point where a closed form degenerates, goes through
// the numeric eigensolver. fd_step <= 0 selects the default step.
CorrelationReport correlation_report(const CouplingConfig& config, char central = 'B',
                                     double fd_step = 0.0, bool numeric_only = false);

// All ground-state measures for one configuration with the analytic-first
// path choice above. mz is <sum_i sigma^z_i>. numeric reports which path
// served the values; fallback marks the case where a closed form existed but
// degenerated at this point.
struct GroundMeasures {
  double n_a_bc = 0.0, n_b_ac = 0.0, n_c_ab = 0.0;
  double n_ab = 0.0, n_ac = 0.0, n_bc = 0.0;
  double t3_a = 0.0, t3_b = 0.0, t3_c = 0.0;
  double mz = 0.0;
  bool numeric = false;
  bool fallback = false;
};

GroundMeasures ground_measures(const CouplingConfig& config, bool numeric_only = false);

// Single-value conveniences over ground_measures; used_numeric (optional)
// reports whether the numeric path served the value.
double ground_t3(const CouplingConfig& config, char central,
                 bool numeric_only = false, bool* used_numeric = nullptr);
double ground_mz(const CouplingConfig& config, bool numeric_only = false,
                 bool* used_numeric = nullptr);

}  // namespace triq
