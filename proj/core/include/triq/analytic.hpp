#pragma once

#include <array>

namespace triq {

// Closed-form spectra, eigenvectors and correlation measures for h = 1.
//
// The Hamiltonian commutes with sz sz sz parity, so it block-diagonalizes over
// the odd sector {|001>,|010>,|100>,|111>} and the even sector
// {|000>,|011>,|101>,|110>}. For omega = 1 (one-parameter anisotropy eta) the
// extra A<->C symmetry reduces each 4x4 block to a 3x3 cubic plus a singlet;
// the cubics are solved by the trigonometric method below. For omega = 0.8 and
// 1.2 the odd 4x4 quartic is solved through its resolvent cubic. Every formula
// here is cross-validated against the numeric eigensolver (see the validate
// subcommand and the acceptance suite); the ground state always lives in the
// odd sector on the supported domain.
//
// Throws errc::analytic_domain wherever a closed form degenerates (vanishing
// amplitude norms, vanishing denominators, cubic parameters out of range);
// callers fall back to the numeric path.

// Coefficients and trig parameters of the two depressed cubics
// E^3 + a E^2 + b E + c (index 1: odd sector, index 2: even sector):
// p = a^2/3 - b, q = ab/3 - c - 2a^3/27, theta = arccos(3q sqrt(3p)/(2p^2))/3.
struct TrigCubicParamsA {
  double a1, a2, b1, b2, c1, c2;
  double p1, p2, q1, q2;
  double theta1, theta2;
};

TrigCubicParamsA trig_cubic_params_one_param(double j, double eta);

// Energies in label order E0..E7 (not ascending):
//   E0/E6/E7 = min/max/mid root of the odd cubic,
//   E1/E4/E5 = min/max/mid root of the even cubic,
//   E2 = a2 = -1 - j eta (even singlet), E3 = a1 = +1 - j eta (odd singlet).
// The two singlets are distinct for generic eta; assigning both to a2 would
// break the traceless-sum identity and the numeric cross-check.
std::array<double, 8> analytic_spectrum_one_param(double j, double eta);

// Ground state alpha|001> + gamma|010> + alpha|100> + chi|111>, normalized by
// k0 = sqrt(2 alpha^2 + gamma^2 + chi^2); e0 is the odd-cubic minimum.
struct AnalyticGroundStateA {
  double alpha, gamma, chi;
  double k0;
  double e0;
  std::array<double, 8> state() const;  // normalized, indices 1,2,4,7
};

AnalyticGroundStateA analytic_ground_state_one_param(double j, double eta);

// Full eigenbasis in label order. psi2 = (|110>-|011>)/sqrt2 and
// psi3 = (|100>-|001>)/sqrt2 exactly; the rest come from the closed
// amplitude formulas and are normalized here.
struct AnalyticEigenbasisA {
  std::array<double, 8> energies;
  std::array<std::array<double, 8>, 8> states;
};

AnalyticEigenbasisA analytic_eigenvectors_one_param(double j, double eta);

// Piecewise-branch threshold for the two supported omega values:
// (5/(4 eta))^(1/3) at omega = 0.8, (5/(6 eta))^(1/3) at omega = 1.2.
// Throws errc::unsupported_branch for any other omega.
double branch_threshold(double eta, double omega);

// Ground state xi|001> + zeta|010> + delta|100> + tau|111> for omega in
// {0.8, 1.2}, via the resolvent cubic of the odd-sector quartic. The energy
// branch switches at branch_threshold; |j - threshold| < 1e-9 throws
// errc::branch_ambiguity.
struct AnalyticGroundStateB {
  double xi, zeta, delta, tau;
  double kcal0;
  double e0;
  double omega_branch;     // 0.8 or 1.2
  bool frustrated_branch;  // j above the threshold
  std::array<double, 8> state() const;  // normalized, indices 1,2,4,7
};

AnalyticGroundStateB analytic_ground_two_param(double j, double eta, double omega);

// T3 with central qubit B evaluated from the two-parameter closed-form ground
// state. The piecewise printed forms for N_AB/T3 assume a specific negative
// block of the partial transpose and break where the other block goes
// negative; the general two-block closed form used here coincides with them
// on their domain of validity and stays exact everywhere (the piecewise forms
// remain available through literal_branch_measures for cross-checks).
double analytic_t3_two_param(double j, double eta, double omega);

// Exact closed-form measures of a (not necessarily normalized) tetrahedral
// state xi|001> + zeta|010> + delta|100> + tau|111>. Each pairwise partial
// transpose splits into two 2x2 blocks; the trace norm is a sum of per-block
// maxima, which is what these expressions evaluate.
struct TetraMeasures {
  double n_a_bc, n_b_ac, n_c_ab;  // one-vs-rest negativities
  double n_ab, n_ac, n_bc;        // pairwise negativities
  double t3_a, t3_b, t3_c;        // tripartite measure per central qubit
  double mz;                      // <sum_i sigma^z_i> = 1 - 4 tau_hat^2
};

TetraMeasures tetra_measures(double xi, double zeta, double delta, double tau);

// The piecewise branch forms exactly as printed (amplitudes normalized
// first), kept for the validate cross-check against tetra_measures.
struct LiteralBranchMeasures {
  double n_ab, n_bc, t3;
};

LiteralBranchMeasures literal_branch_measures(double xi, double zeta, double delta,
                                              double tau, bool frustrated);

// One-parameter closed forms for N_AB and T3 with m = sqrt((alpha^2-gamma^2)^2
// + 4 alpha^2 chi^2). t3 carries the definitional bracket reading
// 2 sqrt((alpha^2+gamma^2) m - (alpha^2-gamma^2)^2)/k0^2, which matches the
// numeric path exactly; the as-printed prefactor variants (2 sqrt2 times the
// bracket, over k0^2 or k0^4) are recorded alongside for the validate report
// rather than silently discarded.
struct AnalyticNabT3 {
  double n_ab;
  double t3;
  double t3_printed_k2;
  double t3_printed_k4;
};

AnalyticNabT3 analytic_nab_t3_one_param(double j, double eta);

}  // namespace triq
