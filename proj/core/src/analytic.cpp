#include "triq/analytic.hpp"

#include <cmath>
#include <string>

#include "triq/error.hpp"

namespace triq {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

// arccos with a 1e-10 guard band: arguments beyond [-1-band, 1+band] signal a
// formula evaluated off its domain rather than roundoff, so they throw
// instead of clamping silently.
double guarded_acos(double x) {
  constexpr double band = 1e-10;
  if (x > 1.0 + band || x < -1.0 - band)
    fail(errc::analytic_domain, "arccos argument " + std::to_string(x) + " out of range");
  return std::acos(std::min(1.0, std::max(-1.0, x)));
}

struct TrigRoots {
  double min, mid, max;
};

// Real roots of E^3 + a E^2 + b E + c via the trigonometric method; requires
// p = a^2/3 - b > 0 (three-real-root regime on the supported domain).
TrigRoots trig_roots(double a, double b, double c, double* p_out, double* q_out,
                     double* theta_out) {
  const double p = a * a / 3.0 - b;
  const double q = a * b / 3.0 - c - 2.0 * a * a * a / 27.0;
  if (!(p > 0.0))
    fail(errc::analytic_domain, "cubic parameter p = " + std::to_string(p) + " not positive");
  const double theta = guarded_acos(3.0 * q * std::sqrt(3.0 * p) / (2.0 * p * p)) / 3.0;
  const double r = std::sqrt(p / 3.0);
  TrigRoots out;
  out.max = 2.0 * r * std::cos(theta) - a / 3.0;
  out.mid = -r * (std::cos(theta) - kSqrt3 * std::sin(theta)) - a / 3.0;
  out.min = -r * (std::cos(theta) + kSqrt3 * std::sin(theta)) - a / 3.0;
  if (p_out) *p_out = p;
  if (q_out) *q_out = q;
  if (theta_out) *theta_out = theta;
  return out;
}

void normalize8(std::array<double, 8>& v) {
  double n2 = 0.0;
  for (double x : v) n2 += x * x;
  const double n = std::sqrt(n2);
  for (double& x : v) x /= n;
}

// Negativity contribution of one 2x2 partial-transpose block with diagonal
// (x, y) and off-diagonal z: the negative eigenvalue, if any, contributes
// sqrt((x-y)^2 + 4z^2) - (x+y) to ||.||_1 - 1.
double block_contribution(double x, double y, double z) {
  return std::max(0.0, std::sqrt((x - y) * (x - y) + 4.0 * z * z) - (x + y));
}

}  // namespace

TrigCubicParamsA trig_cubic_params_one_param(double j, double eta) {
  if (!std::isfinite(j) || !std::isfinite(eta) || eta < 0.0)
    fail(errc::invalid_parameter, "bad (j, eta)");
  const double je = j * eta;
  TrigCubicParamsA t;
  t.a1 = 1.0 - je;
  t.a2 = -1.0 - je;
  t.b1 = -5.0 - 4.0 * j * j - 2.0 * je - je * je;
  t.b2 = -5.0 - 4.0 * j * j + 2.0 * je - je * je;
  t.c1 = 3.0 - 4.0 * j * j + 3.0 * je - 4.0 * j * j * je + je * je + je * je * je;
  t.c2 = -3.0 + 4.0 * j * j + 3.0 * je - 4.0 * j * j * je - je * je + je * je * je;
  trig_roots(t.a1, t.b1, t.c1, &t.p1, &t.q1, &t.theta1);
  trig_roots(t.a2, t.b2, t.c2, &t.p2, &t.q2, &t.theta2);
  return t;
}

std::array<double, 8> analytic_spectrum_one_param(double j, double eta) {
  const TrigCubicParamsA t = trig_cubic_params_one_param(j, eta);
  const TrigRoots odd = trig_roots(t.a1, t.b1, t.c1, nullptr, nullptr, nullptr);
  const TrigRoots even = trig_roots(t.a2, t.b2, t.c2, nullptr, nullptr, nullptr);
  return {odd.min, even.min, t.a2, t.a1, even.max, even.mid, odd.max, odd.mid};
}

namespace {

// Unnormalized odd-sector amplitudes (alpha, gamma, chi) at energy e; used
// for the ground state and for the other two odd-cubic eigenvectors.
void odd_amplitudes(double j, double eta, double e, double* alpha, double* gamma,
                    double* chi) {
  *alpha = j * (2.0 * j + 2.0 * j * e + (2.0 * e + e * e - 3.0) * eta -
                j * j * eta * (eta * eta - 2.0));
  *gamma = j * (e + j * eta - 1.0) * (e + j * eta + 3.0);
  *chi = j * (e + j * eta - 1.0) * (e + j * eta - 1.0);
}

}  // namespace

std::array<double, 8> AnalyticGroundStateA::state() const {
  return {0.0, alpha / k0, gamma / k0, 0.0, alpha / k0, 0.0, 0.0, chi / k0};
}

AnalyticGroundStateA analytic_ground_state_one_param(double j, double eta) {
  const TrigCubicParamsA t = trig_cubic_params_one_param(j, eta);
  const TrigRoots odd = trig_roots(t.a1, t.b1, t.c1, nullptr, nullptr, nullptr);
  AnalyticGroundStateA g;
  g.e0 = odd.min;
  odd_amplitudes(j, eta, g.e0, &g.alpha, &g.gamma, &g.chi);
  g.k0 = std::sqrt(2.0 * g.alpha * g.alpha + g.gamma * g.gamma + g.chi * g.chi);
  // Amplitudes are cubic in (j, e0); a vanishing norm relative to that scale
  // means the formula collapsed (e.g. j -> 0).
  const double scale = 1.0 + std::abs(j) * (1.0 + g.e0 * g.e0);
  if (g.k0 < 1e-10 * scale)
    fail(errc::analytic_domain, "ground amplitude norm vanished");
  return g;
}

AnalyticEigenbasisA analytic_eigenvectors_one_param(double j, double eta) {
  if (std::abs(j) < 1e-12)
    fail(errc::analytic_domain, "eigenvector formulas require j != 0");
  AnalyticEigenbasisA out;
  out.energies = analytic_spectrum_one_param(j, eta);
  for (auto& s : out.states) s.fill(0.0);

  // Odd-cubic states (labels 0, 6, 7): same amplitude pattern as the ground
  // state, evaluated at the respective root.
  for (int label : {0, 6, 7}) {
    const double e = out.energies[label];
    double alpha, gamma, chi;
    odd_amplitudes(j, eta, e, &alpha, &gamma, &chi);
    const double norm =
        std::sqrt(2.0 * alpha * alpha + gamma * gamma + chi * chi);
    const double scale = 1.0 + std::abs(j) * (1.0 + e * e);
    if (norm < 1e-10 * scale)
      fail(errc::analytic_domain,
           "odd-sector amplitudes collapsed at E" + std::to_string(label));
    auto& s = out.states[label];
    s[1] = alpha / norm;
    s[2] = gamma / norm;
    s[4] = alpha / norm;
    s[7] = chi / norm;
  }

  // Even-cubic states (labels 1, 4, 5): alpha_i|000> + |011> + delta_i|101> + |110>.
  for (int label : {1, 4, 5}) {
    const double e = out.energies[label];
    const double den = e + 1.0 + j * eta;
    if (std::abs(den) < 1e-12)
      fail(errc::analytic_domain,
           "even-sector denominator vanished at E" + std::to_string(label));
    const double ai = ((e + 1.0) * (e + 1.0 - j * eta) - 2.0 * j * j) / (j * den);
    const double di = (e * eta + 2.0 * j + eta - j * eta * eta) / den;
    auto& s = out.states[label];
    s[0] = ai;
    s[3] = 1.0;
    s[5] = di;
    s[6] = 1.0;
    normalize8(s);
  }

  // Singlets: exact by symmetry.
  constexpr double inv_sqrt2 = 0.7071067811865475;
  out.states[2][6] = inv_sqrt2;
  out.states[2][3] = -inv_sqrt2;
  out.states[3][4] = inv_sqrt2;
  out.states[3][1] = -inv_sqrt2;
  return out;
}

double branch_threshold(double eta, double omega) {
  double ratio;
  if (omega == 0.8) {
    ratio = 5.0 / (4.0 * eta);
  } else if (omega == 1.2) {
    ratio = 5.0 / (6.0 * eta);
  } else {
    fail(errc::unsupported_branch,
         "closed two-parameter forms exist only for omega = 0.8 or 1.2, got " +
             std::to_string(omega));
  }
  return std::cbrt(ratio);  // eta = 0 gives +inf: the low branch everywhere
}

std::array<double, 8> AnalyticGroundStateB::state() const {
  return {0.0,          xi / kcal0, zeta / kcal0, 0.0,
          delta / kcal0, 0.0,       0.0,          tau / kcal0};
}

AnalyticGroundStateB analytic_ground_two_param(double j, double eta, double omega) {
  const double thr = branch_threshold(eta, omega);
  if (std::isfinite(thr) && std::abs(j - thr) < 1e-9)
    fail(errc::branch_ambiguity,
         "j = " + std::to_string(j) + " sits on the branch threshold " +
             std::to_string(thr));

  // Resolvent-cubic coefficients of the odd-sector quartic (scaled by 25, 125
  // and 625 so they are polynomial in j with integer coefficients).
  const double j2 = j * j, j3 = j2 * j, j4 = j2 * j2;
  const double e2 = eta * eta, e4 = e2 * e2;
  double a, b, c;
  if (omega == 0.8) {
    a = -150.0 - 82.0 * j2 - 50.0 * j2 * e2;
    b = 1000.0 - 800.0 * j3 * eta;
    c = 25.0 * j2 * (50.0 * e2 - 82.0 * j2 * e2 + 25.0 * j2 * e4 + 82.0) +
        81.0 * j4 - 1875.0;
  } else {
    a = -150.0 - 122.0 * j2 - 50.0 * j2 * e2;
    b = 1000.0 - 1200.0 * j3 * eta;
    c = 25.0 * j2 * (50.0 * e2 - 122.0 * j2 * e2 + 25.0 * j2 * e4 + 122.0) +
        121.0 * j4 - 1875.0;
  }

  // The scaled resolvent l^3 + 8a l^2 + (16a^2 - 64c) l - 64 b^2 = 0 has three
  // nonnegative roots; u and v are its depressed-cubic trig parameters.
  const double u = 64.0 * a * a / 3.0 - 16.0 * a * a + 64.0 * c;
  if (!(u > 0.0))
    fail(errc::analytic_domain, "resolvent parameter u not positive");
  const double v = 64.0 * b * b - 1024.0 * a * a * a / 27.0 +
                   (128.0 * a * a * a - 512.0 * a * c) / 3.0;
  const double theta = guarded_acos(3.0 * v * std::sqrt(3.0 * u) / (2.0 * u * u)) / 3.0;
  const double ru = std::sqrt(u / 3.0);
  double l1 = 2.0 * ru * std::cos(theta) - 8.0 * a / 3.0;
  double l2 = -ru * (std::cos(theta) + kSqrt3 * std::sin(theta)) - 8.0 * a / 3.0;
  double l3 = -ru * (std::cos(theta) - kSqrt3 * std::sin(theta)) - 8.0 * a / 3.0;
  const double lscale = std::max(1.0, std::abs(a));
  for (double* l : {&l1, &l2, &l3}) {
    if (*l < -1e-9 * lscale)
      fail(errc::analytic_domain, "negative resolvent root " + std::to_string(*l));
    *l = std::max(0.0, *l);
  }

  AnalyticGroundStateB g;
  g.omega_branch = omega;
  g.frustrated_branch = j > thr;
  // Quartic roots are (+-sqrt l1 +- sqrt l2 +- sqrt l3)/20 with the sign
  // product fixed by b; the ground branch flips the sign of sqrt(l2) when j
  // crosses the threshold (the b = 0 locus).
  g.e0 = g.frustrated_branch
             ? (-std::sqrt(l1) + std::sqrt(l2) - std::sqrt(l3)) / 20.0
             : (-std::sqrt(l1) - std::sqrt(l2) - std::sqrt(l3)) / 20.0;

  const double E = g.e0;
  const double em1 = E - 1.0, ep1 = E + 1.0;
  const double quad = E * E + 2.0 * E - 3.0;
  if (omega == 0.8) {
    g.xi = 125.0 * em1 * em1 * (E + 3.0) - 200.0 * j3 * eta -
           5.0 * j2 * (41.0 * E + 25.0 * e2 * E - 25.0 * e2 + 59.0);
    g.zeta = 250.0 * j2 * ep1 * eta + 4.0 * j3 * (25.0 * e2 + 9.0) +
             100.0 * j * quad;
    g.delta = 200.0 * j2 * ep1 + 5.0 * j3 * (41.0 * eta - 25.0 * e2 * eta) +
              125.0 * quad * j * eta;
    g.tau = 125.0 * j * em1 * em1 + 200.0 * j2 * em1 * eta +
            5.0 * j3 * (25.0 * e2 - 9.0);
  } else {
    g.xi = 125.0 * em1 * em1 * (E + 3.0) - 300.0 * j3 * eta -
           5.0 * j2 * (61.0 * E + 25.0 * e2 * E - 25.0 * e2 + 39.0);
    g.zeta = 250.0 * j2 * ep1 * eta + 2.0 * j3 * (75.0 * e2 - 33.0) +
             150.0 * j * quad;
    g.delta = 300.0 * j2 * ep1 + 5.0 * j3 * (61.0 * eta - 25.0 * e2 * eta) +
              125.0 * quad * j * eta;
    g.tau = 125.0 * j * em1 * em1 + 300.0 * j2 * em1 * eta +
            5.0 * j3 * (25.0 * e2 + 11.0);
  }
  g.kcal0 = std::sqrt(g.xi * g.xi + g.zeta * g.zeta + g.delta * g.delta +
                      g.tau * g.tau);
  const double amp_scale = 1.0 + std::abs(j) + std::abs(E);
  if (g.kcal0 < 1e-10 * amp_scale * amp_scale * amp_scale)
    fail(errc::analytic_domain, "tetrahedral amplitude norm vanished");
  return g;
}

double analytic_t3_two_param(double j, double eta, double omega) {
  const AnalyticGroundStateB g = analytic_ground_two_param(j, eta, omega);
  return tetra_measures(g.xi, g.zeta, g.delta, g.tau).t3_b;
}

TetraMeasures tetra_measures(double xi, double zeta, double delta, double tau) {
  const double k2 = xi * xi + zeta * zeta + delta * delta + tau * tau;
  if (!(k2 > 0.0)) fail(errc::invalid_parameter, "zero tetrahedral state");
  const double x2 = xi * xi / k2;
  const double z2 = zeta * zeta / k2;
  const double d2 = delta * delta / k2;
  const double t2 = tau * tau / k2;
  const double xz = xi * zeta / k2, xd = xi * delta / k2, xt = xi * tau / k2;
  const double zd = zeta * delta / k2, zt = zeta * tau / k2, dt = delta * tau / k2;

  TetraMeasures r;
  // One-vs-rest splits of a pure state: 2 sqrt of the product of the central
  // qubit's two diagonal weights.
  r.n_a_bc = 2.0 * std::sqrt((x2 + z2) * (d2 + t2));
  r.n_b_ac = 2.0 * std::sqrt((x2 + d2) * (z2 + t2));
  r.n_c_ab = 2.0 * std::sqrt((z2 + d2) * (x2 + t2));
  // Pairwise partial transposes decouple into {|00>,|11>} and {|01>,|10>}
  // blocks; at most one block of each is negative.
  r.n_ab = block_contribution(x2, t2, zd) + block_contribution(z2, d2, xt);
  r.n_bc = block_contribution(d2, t2, xz) + block_contribution(x2, z2, dt);
  r.n_ac = block_contribution(z2, t2, xd) + block_contribution(x2, d2, zt);

  auto resid = [](double nb, double n1, double n2) {
    return std::sqrt(std::max(0.0, nb * nb - n1 * n1 - n2 * n2));
  };
  r.t3_a = resid(r.n_a_bc, r.n_ab, r.n_ac);
  r.t3_b = resid(r.n_b_ac, r.n_ab, r.n_bc);
  r.t3_c = resid(r.n_c_ab, r.n_ac, r.n_bc);
  r.mz = 1.0 - 4.0 * t2;
  return r;
}

LiteralBranchMeasures literal_branch_measures(double xi, double zeta, double delta,
                                              double tau, bool frustrated) {
  const double k2 = xi * xi + zeta * zeta + delta * delta + tau * tau;
  if (!(k2 > 0.0)) fail(errc::invalid_parameter, "zero tetrahedral state");
  const double x2 = xi * xi / k2;
  const double z2 = zeta * zeta / k2;
  const double d2 = delta * delta / k2;
  const double t2 = tau * tau / k2;
  const double t0 = std::sqrt((z2 - d2) * (z2 - d2) + 4.0 * x2 * t2);
  const double n0 = std::sqrt((x2 - z2) * (x2 - z2) + 4.0 * d2 * t2);
  const double s0 = std::sqrt((d2 - t2) * (d2 - t2) + 4.0 * x2 * z2);
  const double w0 = x2 + z2 + d2 + t2 + n0 + s0 + std::abs(x2 + z2 - n0) +
                    std::abs(d2 + t2 - s0);

  LiteralBranchMeasures r;
  r.n_ab = t0 - z2 - d2;
  if (frustrated) {
    r.n_bc = 0.5 * w0 - 1.0;
    const double f1 = 4.0 * (x2 + d2) * (z2 + t2) - (d2 + z2 - t0) * (d2 + z2 - t0);
    r.t3 = std::sqrt(std::max(0.0, f1 - 0.25 * (w0 - 2.0) * (w0 - 2.0)));
  } else {
    r.n_bc = n0 - x2 - z2;
    const double f0 = (x2 + z2) * n0 + (z2 + d2) * t0 - (x2 - z2) * (x2 - z2);
    r.t3 = std::sqrt(2.0) * std::sqrt(std::max(0.0, f0 - (z2 - d2) * (z2 - d2)));
  }
  return r;
}

AnalyticNabT3 analytic_nab_t3_one_param(double j, double eta) {
  const AnalyticGroundStateA g = analytic_ground_state_one_param(j, eta);
  const double a2 = g.alpha * g.alpha, g2 = g.gamma * g.gamma, c2 = g.chi * g.chi;
  const double k2 = g.k0 * g.k0;
  const double m = std::sqrt((a2 - g2) * (a2 - g2) + 4.0 * a2 * c2);
  const double bracket = (a2 + g2) * m - (a2 - g2) * (a2 - g2);
  AnalyticNabT3 r;
  r.n_ab = (m - a2 - g2) / k2;
  r.t3 = 2.0 * std::sqrt(std::max(0.0, bracket)) / k2;
  r.t3_printed_k2 = 2.0 * std::sqrt(2.0) * bracket / k2;
  r.t3_printed_k4 = 2.0 * std::sqrt(2.0) * bracket / (k2 * k2);
  return r;
}

}  // namespace triq
