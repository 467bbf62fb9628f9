// Closed-form path checks: trig-cubic spectra, ground amplitudes, the full
// eigenbasis and its collapse points, the two-parameter resolvent branches,
// and the tetrahedral measure formulas, each cross-validated against the
// numeric eigensolver.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <random>

#include "doctest.h"
#include "triq/analytic.hpp"
#include "triq/correlations.hpp"
#include "triq/density.hpp"
#include "triq/error.hpp"
#include "triq/model.hpp"

using namespace triq;

namespace {

double ground_residual(const CouplingConfig& cfg, const std::array<double, 8>& psi,
                       double e0) {
  const HermitianOp8 op = build_hamiltonian(cfg);
  double worst = 0.0;
  for (int i = 0; i < 8; ++i) {
    double acc = 0.0;
    for (int k = 0; k < 8; ++k) acc += op.m.at(i, k) * psi[static_cast<std::size_t>(k)];
    worst = std::max(worst, std::abs(acc - e0 * psi[static_cast<std::size_t>(i)]));
  }
  return worst;
}

std::array<double, 8> tetra_amps(double xi, double zeta, double delta, double tau) {
  std::array<double, 8> a{};
  a[1] = xi;
  a[2] = zeta;
  a[4] = delta;
  a[7] = tau;
  return a;
}

errc thrown_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return errc::io;  // sentinel: nothing was thrown
}

}  // namespace

TEST_SUITE("analytic") {

TEST_CASE("isotropic spectrum matches the quadratic-surd closed forms") {
  // At eta = omega = 1 the full spectrum is
  //   J - 1 +- 2 sqrt(J^2+J+1), J + 1 +- 2 sqrt(J^2-J+1),
  //   -(1+J) twice, (1-J) twice.
  for (double j : {-6.0, -2.5, 2.0, 3.7, 6.0}) {
    const double sp = std::sqrt(j * j + j + 1.0), sm = std::sqrt(j * j - j + 1.0);
    std::array<double, 8> exact = {j - 1.0 - 2.0 * sp, j - 1.0 + 2.0 * sp,
                                   j + 1.0 - 2.0 * sm, j + 1.0 + 2.0 * sm,
                                   -(1.0 + j),         -(1.0 + j),
                                   1.0 - j,            1.0 - j};
    std::sort(exact.begin(), exact.end());
    std::array<double, 8> got = analytic_spectrum_one_param(j, 1.0);
    std::sort(got.begin(), got.end());
    for (int k = 0; k < 8; ++k) {
      CHECK(got[static_cast<std::size_t>(k)] ==
            doctest::Approx(exact[static_cast<std::size_t>(k)]).epsilon(1e-12));
    }
  }
}

TEST_CASE("j=2 spectrum hits the literal reference values") {
  std::array<double, 8> got = analytic_spectrum_one_param(2.0, 1.0);
  std::sort(got.begin(), got.end());
  const std::array<double, 8> expected = {
      1.0 - 2.0 * std::sqrt(7.0), -3.0, -3.0, -1.0, -1.0,
      -0.46410161513775458, 6.2915026221291805, 6.4641016151377544};
  for (int k = 0; k < 8; ++k) {
    CHECK(got[static_cast<std::size_t>(k)] ==
          doctest::Approx(expected[static_cast<std::size_t>(k)]).epsilon(1e-12));
  }
}

TEST_CASE("both singlets sit at -1-j eta and +1-j eta") {
  std::mt19937 rng(31u);
  std::uniform_real_distribution<double> dj(-8.0, 8.0), de(0.1, 2.0);
  for (int t = 0; t < 20; ++t) {
    double j = dj(rng);
    if (std::abs(j) < 0.05) j = 0.5;
    const double eta = de(rng);
    const std::array<double, 8> e = analytic_spectrum_one_param(j, eta);
    CHECK(e[2] == doctest::Approx(-1.0 - j * eta).epsilon(1e-13));
    CHECK(e[3] == doctest::Approx(1.0 - j * eta).epsilon(1e-13));
    double sum = 0.0;
    for (double x : e) sum += x;
    CHECK(std::abs(sum) < 1e-9);  // H is traceless
  }
}

TEST_CASE("analytic energies agree with the eigensolver") {
  std::mt19937 rng(77u);
  std::uniform_real_distribution<double> dj(-8.0, 8.0), de(0.1, 2.0);
  for (int t = 0; t < 40; ++t) {
    double j = dj(rng);
    if (std::abs(j) < 0.05) j = -1.3;
    const double eta = de(rng);
    std::array<double, 8> an = analytic_spectrum_one_param(j, eta);
    std::sort(an.begin(), an.end());
    const Spectrum nu = eigendecompose(build_hamiltonian({j, 1.0, eta, 1.0}));
    for (int k = 0; k < 8; ++k) {
      CHECK(std::abs(an[static_cast<std::size_t>(k)] -
                     nu.energies[static_cast<std::size_t>(k)]) < 1e-8);
    }
  }
}

TEST_CASE("one-parameter ground state is a true eigenstate") {
  std::mt19937 rng(11u);
  std::uniform_real_distribution<double> dj(-8.0, 8.0), de(0.1, 2.0);
  for (int t = 0; t < 25; ++t) {
    double j = dj(rng);
    if (std::abs(j) < 0.05) j = 2.2;
    const double eta = de(rng);
    const AnalyticGroundStateA g = analytic_ground_state_one_param(j, eta);
    CHECK(g.k0 > 0.0);
    std::array<double, 8> sp = analytic_spectrum_one_param(j, eta);
    CHECK(g.e0 == doctest::Approx(*std::min_element(sp.begin(), sp.end()))
                      .epsilon(1e-12));
    const std::array<double, 8> psi = g.state();
    double norm = 0.0;
    for (double x : psi) norm += x * x;
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ground_residual({j, 1.0, eta, 1.0}, psi, g.e0) < 1e-8);
  }
}

TEST_CASE("the critical point j=0 degenerates the amplitude forms only") {
  // The spectrum cubics survive j = 0 (double roots, arccos argument exactly
  // +-1): the result is the bare field spectrum {+-1, +-3}.
  std::array<double, 8> sp = analytic_spectrum_one_param(0.0, 1.0);
  std::sort(sp.begin(), sp.end());
  const std::array<double, 8> field = {-3.0, -1.0, -1.0, -1.0, 1.0, 1.0, 1.0, 3.0};
  for (int k = 0; k < 8; ++k) {
    CHECK(sp[static_cast<std::size_t>(k)] ==
          doctest::Approx(field[static_cast<std::size_t>(k)]).epsilon(1e-12));
  }
  // The ground-amplitude forms all carry a factor j and vanish there.
  CHECK(thrown_code([] { analytic_ground_state_one_param(0.0, 1.0); }) ==
        errc::analytic_domain);
  CHECK(thrown_code([] { analytic_nab_t3_one_param(0.0, 1.0); }) ==
        errc::analytic_domain);
}

TEST_CASE("full eigenbasis is orthonormal and diagonalizes H away from eta=1") {
  for (auto [j, eta] : {std::pair{6.0, 0.9}, std::pair{-4.0, 1.3},
                        std::pair{2.0, 0.4}}) {
    const AnalyticEigenbasisA basis = analytic_eigenvectors_one_param(j, eta);
    const HermitianOp8 op = build_hamiltonian({j, 1.0, eta, 1.0});
    for (int k = 0; k < 8; ++k) {
      const auto& psi = basis.states[static_cast<std::size_t>(k)];
      double res = 0.0;
      for (int i = 0; i < 8; ++i) {
        double acc = 0.0;
        for (int l = 0; l < 8; ++l) acc += op.m.at(i, l) * psi[static_cast<std::size_t>(l)];
        res = std::max(res, std::abs(acc - basis.energies[static_cast<std::size_t>(k)] *
                                               psi[static_cast<std::size_t>(i)]));
      }
      CHECK(res < 1e-8);
      for (int l = 0; l < 8; ++l) {
        double dot = 0.0;
        for (int i = 0; i < 8; ++i) {
          dot += psi[static_cast<std::size_t>(i)] *
                 basis.states[static_cast<std::size_t>(l)][static_cast<std::size_t>(i)];
        }
        CHECK(std::abs(dot - (k == l ? 1.0 : 0.0)) < 1e-8);
      }
    }
  }
}

TEST_CASE("eigenbasis formulas collapse at the isotropic degeneracy") {
  // At eta = 1 the triangle gains the full S3 symmetry and both sectors pick
  // up degenerate pairs; the printed excited-state amplitudes vanish there.
  CHECK(thrown_code([] { analytic_eigenvectors_one_param(6.0, 1.0); }) ==
        errc::analytic_domain);
  CHECK(thrown_code([] { analytic_eigenvectors_one_param(-4.0, 1.0); }) ==
        errc::analytic_domain);
}

TEST_CASE("low-temperature eigenvector parameter a matches the numeric ground") {
  // For the nonfrustrated isotropic model the ground state is
  // N(a,1,1,a)-type with a = (E0+J-1)/(E0+J+3); check the amplitude ratio of
  // the numeric eigenvector against that parameter at j=-4.
  const double j = -4.0;
  const Spectrum sp = eigendecompose(build_hamiltonian({j, 1.0, 1.0, 1.0}));
  const GroundState g = ground_state(sp);
  const double a = (sp.energies[0] + j - 1.0) / (sp.energies[0] + j + 3.0);
  CHECK(g.amplitudes[7] / g.amplitudes[2] == doctest::Approx(a).epsilon(1e-10));
  const AnalyticGroundStateA ga = analytic_ground_state_one_param(j, 1.0);
  CHECK(ga.chi / ga.gamma == doctest::Approx(a).epsilon(1e-12));
}

TEST_CASE("branch thresholds take their closed values") {
  CHECK(branch_threshold(1.0, 0.8) ==
        doctest::Approx(std::cbrt(5.0 / 4.0)).epsilon(1e-14));
  CHECK(branch_threshold(0.5, 0.8) ==
        doctest::Approx(std::cbrt(5.0 / 2.0)).epsilon(1e-14));
  CHECK(branch_threshold(1.0, 1.2) ==
        doctest::Approx(std::cbrt(5.0 / 6.0)).epsilon(1e-14));
  CHECK(thrown_code([] { branch_threshold(1.0, 0.9); }) ==
        errc::unsupported_branch);
  CHECK(thrown_code([] { branch_threshold(1.0, 1.0); }) ==
        errc::unsupported_branch);
}

TEST_CASE("two-parameter ground state is a true eigenstate on both branches") {
  for (double omega : {0.8, 1.2}) {
    for (double eta : {0.5, 1.0, 1.6}) {
      const double thr = branch_threshold(eta, omega);
      for (double j : {-6.0, -1.0, 0.5 * thr, thr - 0.3, thr + 0.3, 6.0}) {
        const AnalyticGroundStateB g = analytic_ground_two_param(j, eta, omega);
        CHECK(g.frustrated_branch == (j > thr));
        const std::array<double, 8> psi = g.state();
        const CouplingConfig cfg{j, 1.0, eta, omega};
        CHECK(ground_residual(cfg, psi, g.e0) < 1e-8);
        const Spectrum nu = eigendecompose(build_hamiltonian(cfg));
        CHECK(std::abs(g.e0 - nu.energies[0]) < 1e-8);
      }
    }
  }
}

TEST_CASE("threshold neighborhood: ambiguity window and continuity") {
  const double thr = branch_threshold(1.0, 0.8);
  CHECK(thrown_code([thr] { analytic_ground_two_param(thr, 1.0, 0.8); }) ==
        errc::branch_ambiguity);
  CHECK(thrown_code([thr] { analytic_ground_two_param(thr + 1e-10, 1.0, 0.8); }) ==
        errc::branch_ambiguity);
  const double below = analytic_t3_two_param(thr - 1e-5, 1.0, 0.8);
  const double above = analytic_t3_two_param(thr + 1e-5, 1.0, 0.8);
  CHECK(std::abs(above - below) < 1e-4);

  const double thr12 = branch_threshold(1.0, 1.2);
  const double b12 = analytic_t3_two_param(thr12 - 1e-5, 1.0, 1.2);
  const double a12 = analytic_t3_two_param(thr12 + 1e-5, 1.0, 1.2);
  CHECK(std::abs(a12 - b12) < 1e-4);
}

TEST_CASE("two-parameter t3 agrees with the numeric path") {
  for (double omega : {0.8, 1.2}) {
    for (auto [j, eta] : {std::pair{6.0, 1.0}, std::pair{-3.0, 0.7},
                          std::pair{2.5, 1.8}, std::pair{-0.5, 0.4}}) {
      const double an = analytic_t3_two_param(j, eta, omega);
      const double nu = ground_t3({j, 1.0, eta, omega}, 'B', /*numeric_only=*/true);
      CHECK(an == doctest::Approx(nu).epsilon(1e-9));
    }
  }
}

TEST_CASE("tetra measures reproduce the brute-force negativities") {
  std::mt19937 rng(404u);
  std::normal_distribution<double> dist(0.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    const double xi = dist(rng), zeta = dist(rng), delta = dist(rng), tau = dist(rng);
    const TetraMeasures tm = tetra_measures(xi, zeta, delta, tau);
    const std::array<double, 8> amps = tetra_amps(xi, zeta, delta, tau);
    const DensityMatrix rho = DensityMatrix::pure(amps);
    CHECK(tm.n_b_ac == doctest::Approx(negativity(rho, 'B')).epsilon(1e-10));
    CHECK(tm.n_a_bc == doctest::Approx(negativity(rho, 'A')).epsilon(1e-10));
    CHECK(tm.n_ab ==
          doctest::Approx(negativity(partial_trace(rho, "AB"), 'A')).epsilon(1e-10));
    CHECK(tm.n_bc ==
          doctest::Approx(negativity(partial_trace(rho, "BC"), 'B')).epsilon(1e-10));
    CHECK(tm.n_ac ==
          doctest::Approx(negativity(partial_trace(rho, "AC"), 'C')).epsilon(1e-10));
    CHECK(tm.t3_b == doctest::Approx(t3(amps, 'B')).epsilon(1e-10));
    CHECK(tm.t3_a == doctest::Approx(t3(amps, 'A')).epsilon(1e-10));
    const double k2 = xi * xi + zeta * zeta + delta * delta + tau * tau;
    CHECK(tm.mz == doctest::Approx(1.0 - 4.0 * tau * tau / k2).epsilon(1e-12));
  }
}

TEST_CASE("literal branch forms match the general ones at omega=0.8") {
  for (double eta : {0.3, 1.0, 1.7}) {
    for (double j : {-6.0, -2.0, 0.5, 2.0, 6.0}) {
      const AnalyticGroundStateB g = analytic_ground_two_param(j, eta, 0.8);
      const TetraMeasures tm = tetra_measures(g.xi, g.zeta, g.delta, g.tau);
      const LiteralBranchMeasures lit =
          literal_branch_measures(g.xi, g.zeta, g.delta, g.tau, g.frustrated_branch);
      CHECK(lit.n_ab == doctest::Approx(tm.n_ab).epsilon(1e-10));
      CHECK(lit.n_bc == doctest::Approx(tm.n_bc).epsilon(1e-10));
      CHECK(lit.t3 == doctest::Approx(tm.t3_b).epsilon(1e-10));
    }
  }
}

TEST_CASE("one-parameter n_ab and t3 closed forms match the numeric measures") {
  for (auto [j, eta] : {std::pair{6.0, 1.0}, std::pair{-3.0, 0.7},
                        std::pair{2.0, 1.8}, std::pair{-0.4, 0.25}}) {
    const AnalyticNabT3 r = analytic_nab_t3_one_param(j, eta);
    const GroundMeasures gm =
        ground_measures({j, 1.0, eta, 1.0}, /*numeric_only=*/true);
    CHECK(r.n_ab == doctest::Approx(gm.n_ab).epsilon(1e-9));
    CHECK(r.t3 == doctest::Approx(gm.t3_b).epsilon(1e-9));
    CHECK(std::isfinite(r.t3_printed_k2));
    CHECK(std::isfinite(r.t3_printed_k4));
  }
  CHECK(std::abs(analytic_nab_t3_one_param(6.0, 1.0).t3 - 0.48775122560031) < 1e-11);
}

}  // TEST_SUITE
