// Hamiltonian construction and exact-diagonalization checks: matrix entries,
// parity block structure, ground-sector support and the bond relabeling
// symmetry (swapping spins A and B exchanges eta and omega).

#include <array>
#include <cmath>
#include <random>

#include "doctest.h"
#include "triq/error.hpp"
#include "triq/model.hpp"

using namespace triq;

namespace {

int popcount3(int idx) { return ((idx >> 2) & 1) + ((idx >> 1) & 1) + (idx & 1); }

}  // namespace

TEST_SUITE("model") {

TEST_CASE("matrix entries follow the basis convention") {
  const CouplingConfig cfg{2.5, 1.0, 0.7, 1.3};
  const HermitianOp8 op = build_hamiltonian(cfg);
  for (int i = 0; i < 8; ++i) {
    // Field part: each |0> contributes +h, each |1> contributes -h.
    CHECK(op.m.at(i, i) ==
          doctest::Approx(cfg.h * (3.0 - 2.0 * popcount3(i))).epsilon(1e-15));
    // sx sx terms flip exactly the two spins of their bond.
    CHECK(op.m.at(i, i ^ 0b110) == doctest::Approx(cfg.j).epsilon(1e-15));
    CHECK(op.m.at(i, i ^ 0b011) == doctest::Approx(cfg.j * cfg.omega).epsilon(1e-15));
    CHECK(op.m.at(i, i ^ 0b101) == doctest::Approx(cfg.j * cfg.eta).epsilon(1e-15));
    // No single- or triple-flip matrix elements.
    for (int flip : {0b001, 0b010, 0b100, 0b111}) {
      CHECK(op.m.at(i, i ^ flip) == 0.0);
    }
  }
}

TEST_CASE("hamiltonian is exactly symmetric") {
  const HermitianOp8 op = build_hamiltonian({-3.2, 1.0, 0.4, 1.8});
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) CHECK(op.m.at(i, j) == op.m.at(j, i));
}

TEST_CASE("parity blocks do not mix") {
  // Every coupling flips two spins, the field flips none, so matrix elements
  // between odd and even popcount states vanish identically.
  const HermitianOp8 op = build_hamiltonian({4.0, 1.0, 1.9, 0.3});
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      if (popcount3(i) % 2 != popcount3(j) % 2) CHECK(op.m.at(i, j) == 0.0);
    }
  }
}

TEST_CASE("isotropic j=2 spectrum matches the closed forms") {
  const Spectrum sp = eigendecompose(build_hamiltonian({2.0, 1.0, 1.0, 1.0}));
  const std::array<double, 8> expected = {
      1.0 - 2.0 * std::sqrt(7.0), -3.0, -3.0, -1.0, -1.0,
      -0.46410161513775458, 6.2915026221291805, 6.4641016151377544};
  for (int k = 0; k < 8; ++k) {
    CHECK(sp.energies[static_cast<std::size_t>(k)] ==
          doctest::Approx(expected[static_cast<std::size_t>(k)]).epsilon(1e-12));
  }
  CHECK(sp.gap == doctest::Approx(sp.energies[1] - sp.energies[0]).epsilon(1e-15));
}

TEST_CASE("ground state lives in the odd parity sector") {
  for (double j : {-6.0, -0.5, 0.7, 2.0, 6.0, 40.0}) {
    const Spectrum sp = eigendecompose(build_hamiltonian({j, 1.0, 1.0, 1.0}));
    const GroundState g = ground_state(sp);
    for (int idx : {0, 3, 5, 6}) {
      CHECK(std::abs(g.amplitudes[static_cast<std::size_t>(idx)]) < 1e-9);
    }
    double norm = 0.0;
    for (double a : g.amplitudes) norm += a * a;
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("ground state gauge fixes the first nonzero amplitude positive") {
  std::mt19937 rng(99u);
  std::uniform_real_distribution<double> dj(-8.0, 8.0), de(0.1, 2.0);
  for (int t = 0; t < 25; ++t) {
    const CouplingConfig cfg{dj(rng), 1.0, de(rng), de(rng)};
    const GroundState g = ground_state(eigendecompose(build_hamiltonian(cfg)));
    for (double a : g.amplitudes) {
      if (std::abs(a) > 1e-12) {
        CHECK(a > 0.0);
        break;
      }
    }
  }
}

TEST_CASE("swapping A and B exchanges eta and omega") {
  std::mt19937 rng(123u);
  std::uniform_real_distribution<double> dj(-6.0, 6.0), de(0.1, 2.0);
  for (int t = 0; t < 20; ++t) {
    const double j = dj(rng), a = de(rng), b = de(rng);
    const Spectrum s1 = eigendecompose(build_hamiltonian({j, 1.0, a, b}));
    const Spectrum s2 = eigendecompose(build_hamiltonian({j, 1.0, b, a}));
    for (int k = 0; k < 8; ++k) {
      CHECK(s1.energies[static_cast<std::size_t>(k)] ==
            doctest::Approx(s2.energies[static_cast<std::size_t>(k)]).epsilon(1e-10));
    }
  }
}

TEST_CASE("config validation rejects bad parameters") {
  CHECK_THROWS_AS((CouplingConfig{1.0, 1.0, -0.1, 1.0}.validate()), Error);
  CHECK_THROWS_AS((CouplingConfig{1.0, 1.0, 1.0, -2.0}.validate()), Error);
  CHECK_THROWS_AS((CouplingConfig{1.0, 0.0, 1.0, 1.0}.validate()), Error);
  CHECK_THROWS_AS(
      (CouplingConfig{std::nan(""), 1.0, 1.0, 1.0}.validate()), Error);
  try {
    CouplingConfig{1.0, 1.0, -0.1, 1.0}.validate();
  } catch (const Error& e) {
    CHECK(e.code() == errc::invalid_config);
  }
  CHECK_NOTHROW((CouplingConfig{0.0, 1.0, 0.0, 0.0}.validate()));
}

TEST_CASE("degeneracy flag follows the tolerance") {
  const Spectrum sp = eigendecompose(build_hamiltonian({2.0, 1.0, 1.0, 1.0}));
  CHECK_FALSE(ground_state(sp).degenerate);
  CHECK(ground_state(sp, 10.0).degenerate);
}

}  // TEST_SUITE
