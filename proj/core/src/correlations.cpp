#include "triq/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "triq/analytic.hpp"
#include "triq/error.hpp"
#include "triq/jacobi.hpp"

namespace triq {

namespace {

void check_central(char central) {
  if (central != 'A' && central != 'B' && central != 'C')
    fail(errc::invalid_parameter, std::string("central qubit must be A, B or C, got '") +
                                      central + "'");
}

// The two non-central labels in ABC order.
std::array<char, 2> partners(char central) {
  switch (central) {
    case 'A': return {'B', 'C'};
    case 'B': return {'A', 'C'};
    default: return {'A', 'B'};
  }
}

std::string pair_labels(char central, char other) {
  std::string p{central, other};
  if (p[0] > p[1]) std::swap(p[0], p[1]);  // keep ABC subsequence order
  return p;
}

double pair_negativity(const DensityMatrix& rho, char central, char other) {
  return negativity(partial_trace(rho, pair_labels(central, other)), central);
}

double residual(double n_central, double n1, double n2) {
  return std::sqrt(std::max(0.0, n_central * n_central - n1 * n1 - n2 * n2));
}

double pick_t3(const TetraMeasures& m, char central) {
  switch (central) {
    case 'A': return m.t3_a;
    case 'B': return m.t3_b;
    default: return m.t3_c;
  }
}

// Closed-form ground measures when a branch exists for this configuration.
// Returns false when no closed form covers it (h != 1 or unsupported omega);
// throws when a covered branch degenerates at this point.
bool analytic_measures(const CouplingConfig& cfg, TetraMeasures* out) {
  if (cfg.h != 1.0) return false;
  if (cfg.omega == 1.0) {
    const AnalyticGroundStateA g = analytic_ground_state_one_param(cfg.j, cfg.eta);
    *out = tetra_measures(g.alpha, g.gamma, g.alpha, g.chi);
    return true;
  }
  if (cfg.omega == 0.8 || cfg.omega == 1.2) {
    const AnalyticGroundStateB g = analytic_ground_two_param(cfg.j, cfg.eta, cfg.omega);
    *out = tetra_measures(g.xi, g.zeta, g.delta, g.tau);
    return true;
  }
  return false;
}

GroundState numeric_ground(const CouplingConfig& cfg) {
  return ground_state(eigendecompose(build_hamiltonian(cfg)));
}

}  // namespace

GroundMeasures ground_measures(const CouplingConfig& config, bool numeric_only) {
  config.validate();
  GroundMeasures out;
  if (!numeric_only) {
    bool branch_existed = false;
    try {
      TetraMeasures m;
      branch_existed = true;
      if (analytic_measures(config, &m)) {
        out.n_a_bc = m.n_a_bc;
        out.n_b_ac = m.n_b_ac;
        out.n_c_ab = m.n_c_ab;
        out.n_ab = m.n_ab;
        out.n_ac = m.n_ac;
        out.n_bc = m.n_bc;
        out.t3_a = m.t3_a;
        out.t3_b = m.t3_b;
        out.t3_c = m.t3_c;
        out.mz = m.mz;
        return out;
      }
    } catch (const Error&) {
      // a covered branch degenerated at this point; fall back and record it
      out.fallback = branch_existed;
    }
  }
  out.numeric = true;
  const GroundState g = numeric_ground(config);
  const DensityMatrix rho = DensityMatrix::pure(g.amplitudes);
  out.n_a_bc = negativity(rho, 'A');
  out.n_b_ac = negativity(rho, 'B');
  out.n_c_ab = negativity(rho, 'C');
  out.n_ab = negativity(partial_trace(rho, "AB"), 'A');
  out.n_ac = negativity(partial_trace(rho, "AC"), 'A');
  out.n_bc = negativity(partial_trace(rho, "BC"), 'B');
  out.t3_a = t3(g.amplitudes, 'A');
  out.t3_b = t3(g.amplitudes, 'B');
  out.t3_c = t3(g.amplitudes, 'C');
  double mz = 0.0;
  for (int idx = 0; idx < 8; ++idx) {
    const int ones = ((idx >> 2) & 1) + ((idx >> 1) & 1) + (idx & 1);
    mz += g.amplitudes[idx] * g.amplitudes[idx] * (3 - 2 * ones);
  }
  out.mz = mz;
  return out;
}

double negativity(const DensityMatrix& rho, char transposed) {
  const SymMat pt = partial_transpose(rho, transposed);
  const EigenSystem es = jacobi_eigh(pt);
  double sum = 0.0;
  for (int i = 0; i < es.n; ++i) {
    const double lam = es.values[i];
    if (lam < -1e-12) sum -= lam;  // [-1e-12, 0] counts as zero
  }
  return 2.0 * sum;
}

double t3(const std::array<double, 8>& amplitudes, char central) {
  check_central(central);
  const DensityMatrix rho = DensityMatrix::pure(amplitudes);
  // Pure-state one-vs-rest negativity 2 sqrt(det rho_c) from the central
  // qubit's Schmidt spectrum.
  const DensityMatrix rc = partial_trace(rho, std::string_view(&central, 1));
  const double det = rc.m.at(0, 0) * rc.m.at(1, 1) - rc.m.at(0, 1) * rc.m.at(0, 1);
  const double nc = 2.0 * std::sqrt(std::max(0.0, det));
  const auto [o1, o2] = partners(central);
  return residual(nc, pair_negativity(rho, central, o1),
                  pair_negativity(rho, central, o2));
}

double t3(const DensityMatrix& rho, char central) {
  check_central(central);
  if (rho.nqubits() != 3)
    fail(errc::invalid_parameter, "t3 needs a 3-qubit density matrix");
  const double nc = negativity(rho, central);
  const auto [o1, o2] = partners(central);
  return residual(nc, pair_negativity(rho, central, o1),
                  pair_negativity(rho, central, o2));
}

double default_fd_step(double j) { return 1e-4 * std::max(1.0, std::abs(j)); }

double ground_t3(const CouplingConfig& config, char central, bool numeric_only,
                 bool* used_numeric) {
  check_central(central);
  if (!numeric_only) {
    try {
      TetraMeasures m;
      if (analytic_measures(config, &m)) {
        if (used_numeric) *used_numeric = false;
        return pick_t3(m, central);
      }
    } catch (const Error&) {
      // closed form degenerated here; take the numeric path below
    }
  }
  if (used_numeric) *used_numeric = true;
  return t3(numeric_ground(config).amplitudes, central);
}

double ground_mz(const CouplingConfig& config, bool numeric_only, bool* used_numeric) {
  if (!numeric_only) {
    try {
      TetraMeasures m;
      if (analytic_measures(config, &m)) {
        if (used_numeric) *used_numeric = false;
        return m.mz;
      }
    } catch (const Error&) {
    }
  }
  if (used_numeric) *used_numeric = true;
  const GroundState g = numeric_ground(config);
  double mz = 0.0;
  for (int idx = 0; idx < 8; ++idx) {
    const int ones = ((idx >> 2) & 1) + ((idx >> 1) & 1) + (idx & 1);
    mz += g.amplitudes[idx] * g.amplitudes[idx] * (3 - 2 * ones);
  }
  return mz;
}

namespace {

// Shared differencing scheme for both susceptibilities: central difference in
// j, shrunk so j +- d stays on one side of zero, with a flagged forward
// difference exactly at j = 0.
template <typename F>
FdValue differentiate(const CouplingConfig& config, double step, F&& eval) {
  if (!(step > 0.0) || !std::isfinite(step))
    fail(errc::invalid_parameter, "finite-difference step must be positive");
  CouplingConfig c = config;
  if (config.j == 0.0) {
    c.j = step;
    const double f1 = eval(c);
    c.j = 0.0;
    const double f0 = eval(c);
    return {(f1 - f0) / step, true};
  }
  double d = step;
  if (std::abs(config.j) <= d) d = std::abs(config.j) / 2.0;
  c.j = config.j + d;
  const double fp = eval(c);
  c.j = config.j - d;
  const double fm = eval(c);
  return {(fp - fm) / (2.0 * d), false};
}

}  // namespace

FdValue mqc_susceptibility(const CouplingConfig& config, char central, double step,
                           bool numeric_only) {
  config.validate();
  check_central(central);
  return differentiate(config, step, [&](const CouplingConfig& c) {
    return ground_t3(c, central, numeric_only);
  });
}

FdValue magnetic_susceptibility(const CouplingConfig& config, double step,
                                bool numeric_only) {
  config.validate();
  return differentiate(config, step, [&](const CouplingConfig& c) {
    return ground_mz(c, numeric_only);
  });
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::frustrated: return "frustrated";
    case Regime::nonfrustrated: return "nonfrustrated";
    default: return "indeterminate";
  }
}

Regime classify_regime(double /*t3*/, double chi_t3, std::optional<int> j_sign_hint,
                       double dead_band) {
  if (chi_t3 > dead_band) return Regime::frustrated;
  if (chi_t3 < -dead_band) return Regime::nonfrustrated;
  if (j_sign_hint && *j_sign_hint > 0) return Regime::frustrated;
  if (j_sign_hint && *j_sign_hint < 0) return Regime::nonfrustrated;
  return Regime::indeterminate;
}

CorrelationReport correlation_report(const CouplingConfig& config, char central,
                                     double fd_step, bool numeric_only) {
  config.validate();
  check_central(central);
  CorrelationReport rep;
  rep.central = central;

  const GroundMeasures m = ground_measures(config, numeric_only);
  rep.n_a_bc = m.n_a_bc;
  rep.n_b_ac = m.n_b_ac;
  rep.n_c_ab = m.n_c_ab;
  rep.n_ab = m.n_ab;
  rep.n_ac = m.n_ac;
  rep.n_bc = m.n_bc;
  rep.t3_central_a = m.t3_a;
  rep.t3_central_b = m.t3_b;
  rep.t3_central_c = m.t3_c;
  rep.path = m.numeric ? "numeric" : "analytic";
  if (m.fallback) rep.flags.push_back("numeric-fallback");

  const double step = fd_step > 0.0 ? fd_step : default_fd_step(config.j);
  const FdValue chi = mqc_susceptibility(config, central, step, numeric_only);
  const FdValue chim = magnetic_susceptibility(config, step, numeric_only);
  rep.chi_t3 = chi.value;
  rep.chi_m = chim.value;
  if (chi.one_sided || chim.one_sided) rep.flags.push_back("one-sided-fd");
  return rep;
}

}  // namespace triq
