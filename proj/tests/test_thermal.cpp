// Gibbs-state invariants (PSD, trace, commutation with H, energy-shift
// independence), the zero-temperature limits, the temperature grid shape and
// the frustrated/nonfrustrated crossing locator.

#include <array>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "triq/error.hpp"
#include "triq/model.hpp"
#include "triq/thermal.hpp"

using namespace triq;

namespace {

double commutator_max(const SymMat& h, const SymMat& rho) {
  double worst = 0.0;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      double hr = 0.0, rh = 0.0;
      for (int k = 0; k < 8; ++k) {
        hr += h.at(i, k) * rho.at(k, j);
        rh += rho.at(i, k) * h.at(k, j);
      }
      worst = std::max(worst, std::abs(hr - rh));
    }
  }
  return worst;
}

}  // namespace

TEST_SUITE("thermal") {

TEST_CASE("gibbs state is a valid state commuting with H") {
  for (double t : {0.0, 0.05, 0.3, 2.0}) {
    const CouplingConfig cfg{2.0, 1.0, 1.0, 1.0};
    const HermitianOp8 op = build_hamiltonian(cfg);
    const Spectrum sp = eigendecompose(op);
    const ThermalPoint tp = gibbs_state(sp, t);
    CHECK_NOTHROW(tp.rho.validate());  // PSD, unit trace, symmetric
    CHECK(commutator_max(op.m, tp.rho.m) < 1e-10);
    double wsum = 0.0;
    for (double w : tp.weights) wsum += w;
    CHECK(wsum == doctest::Approx(1.0).epsilon(1e-12));
    for (int k = 1; k < 8; ++k) {
      // Boltzmann weights cannot increase with energy.
      CHECK(tp.weights[static_cast<std::size_t>(k)] <=
            tp.weights[static_cast<std::size_t>(k - 1)] + 1e-15);
    }
  }
}

TEST_CASE("t=0 yields the ground projector") {
  const Spectrum sp = eigendecompose(build_hamiltonian({6.0, 1.0, 1.0, 1.0}));
  const GroundState g = ground_state(sp);
  const ThermalPoint tp = gibbs_state(sp, 0.0);
  CHECK(tp.weights[0] == doctest::Approx(1.0).epsilon(1e-14));
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      CHECK(tp.rho.m.at(i, j) ==
            doctest::Approx(g.amplitudes[static_cast<std::size_t>(i)] *
                            g.amplitudes[static_cast<std::size_t>(j)])
                .epsilon(1e-10));
    }
  }
}

TEST_CASE("t=0 with a degenerate ground space is the equal mixture") {
  Spectrum sp;
  sp.energies = {0.0, 0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0};
  sp.vectors = SymMat::identity(8);
  sp.gap = 0.0;
  const ThermalPoint tp = gibbs_state(sp, 0.0);
  CHECK(tp.weights[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(tp.weights[1] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(tp.weights[2] == 0.0);
  CHECK(tp.rho.m.at(0, 0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(tp.rho.m.at(1, 1) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(tp.rho.m.at(0, 1) == doctest::Approx(0.0));
}

TEST_CASE("energy shift leaves the gibbs state unchanged") {
  const Spectrum sp = eigendecompose(build_hamiltonian({-4.0, 1.0, 0.7, 1.0}));
  Spectrum shifted = sp;
  for (double& e : shifted.energies) e += 17.3;
  const ThermalPoint a = gibbs_state(sp, 0.2);
  const ThermalPoint b = gibbs_state(shifted, 0.2);
  for (int i = 0; i < 8; ++i) {
    CHECK(a.weights[static_cast<std::size_t>(i)] ==
          doctest::Approx(b.weights[static_cast<std::size_t>(i)]).epsilon(1e-12));
    for (int j = 0; j < 8; ++j) {
      CHECK(a.rho.m.at(i, j) == doctest::Approx(b.rho.m.at(i, j)).epsilon(1e-12));
    }
  }
}

TEST_CASE("temperature limits behave") {
  const Spectrum sp = eigendecompose(build_hamiltonian({2.0, 1.0, 1.0, 1.0}));
  const ThermalPoint hot = gibbs_state(sp, 1e9);
  for (double w : hot.weights) CHECK(w == doctest::Approx(0.125).epsilon(1e-6));
  const ThermalPoint cold = gibbs_state(sp, 1e-6);
  CHECK(cold.weights[0] == doctest::Approx(1.0).epsilon(1e-12));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) CHECK(std::isfinite(cold.rho.m.at(i, j)));
  CHECK_THROWS_AS(gibbs_state(sp, -0.1), Error);
  try {
    gibbs_state(sp, -0.1);
  } catch (const Error& e) {
    CHECK(e.code() == errc::invalid_parameter);
  }
}

TEST_CASE("thermal t3 continuously extends the ground value") {
  const CouplingConfig cfg{6.0, 1.0, 1.0, 1.0};
  CHECK(std::abs(thermal_t3(cfg, 0.0) - 0.48775122560031) < 1e-11);
  CHECK(std::abs(thermal_t3(cfg, 1e-8) - thermal_t3(cfg, 0.0)) < 1e-9);
  // Nonfrustrated decay: cold beats hot.
  const CouplingConfig nf{-2.0, 1.0, 1.0, 1.0};
  CHECK(thermal_t3(nf, 0.001) > thermal_t3(nf, 1.5));
}

TEST_CASE("robustness delta definition and domain") {
  const CouplingConfig cfg{6.0, 1.0, 1.0, 1.0};
  const double d = robustness_delta(cfg, 0.05);
  CHECK(d >= 0.0);
  CHECK(d == doctest::Approx(thermal_t3(cfg, 0.0) - thermal_t3(cfg, 0.05))
                 .epsilon(1e-12));
  CHECK_THROWS_AS(robustness_delta(cfg, 0.0), Error);
}

TEST_CASE("temperature grid shape") {
  const std::vector<double> g = temperature_grid(1.5, 50);
  REQUIRE(g.size() == 50);
  CHECK(g.front() == doctest::Approx(1e-3).epsilon(1e-15));
  // 3*50/10 = 15 geometric points ending exactly at the 0.1 knee.
  CHECK(g[14] == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(g.back() == doctest::Approx(1.5).epsilon(1e-15));
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);

  const std::vector<double> tiny = temperature_grid(0.8, 2);
  REQUIRE(tiny.size() == 2);
  CHECK(tiny[0] == doctest::Approx(1e-3).epsilon(1e-15));
  CHECK(tiny[1] == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(std::isfinite(tiny[0]));

  CHECK_THROWS_AS(temperature_grid(1.5, 1), Error);
  CHECK_THROWS_AS(temperature_grid(1e-4, 10), Error);
}

TEST_CASE("frustrated-nonfrustrated crossing at |j|=2") {
  const double tc = thermal_crossing(2.0, 1.0, 1.0, 0.05, 0.5);
  CHECK(tc > 0.1894);
  CHECK(tc < 0.1944);
  // No sign change past the crossing: the locator must say so.
  CHECK_THROWS_AS(thermal_crossing(2.0, 1.0, 1.0, 0.3, 0.5), Error);
}

}  // TEST_SUITE
