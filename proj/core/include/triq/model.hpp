#pragma once

#include <array>

#include "triq/jacobi.hpp"

namespace triq {

// Three Ising spins on a triangle in a transverse field,
//
//   H = J (sx_A sx_B + omega sx_B sx_C + eta sx_C sx_A) + h (sz_A + sz_B + sz_C),
//
// in the computational basis |s_A s_B s_C> with index = 4 s_A + 2 s_B + s_C
// and |0> the +1 eigenvector of sigma^z. That ordering is fixed here and used
// by every module (partial traces, analytic amplitudes, CLI output).
// omega = eta = 1 is the isotropic triangle; j > 0 is the frustrated regime.

struct CouplingConfig {
  double j = 0.0;
  double h = 1.0;
  double eta = 1.0;
  double omega = 1.0;

  // Throws errc::invalid_config unless all fields are finite, eta >= 0,
  // omega >= 0 and h > 0.
  void validate() const;
};

struct HermitianOp8 {
  SymMat m;  // n = 8, real symmetric
};

struct Spectrum {
  std::array<double, 8> energies{};  // ascending
  SymMat vectors;                    // column k = eigenvector of energies[k]
  double gap = 0.0;                  // energies[1] - energies[0]
};

struct GroundState {
  std::array<double, 8> amplitudes{};
  bool degenerate = false;
};

HermitianOp8 build_hamiltonian(const CouplingConfig& config);

// In-house cyclic Jacobi decomposition (see jacobi.hpp for the scheme).
Spectrum eigendecompose(const HermitianOp8& op);

// Lowest eigenvector, gauge-fixed so its first nonzero amplitude is positive.
// The degenerate flag is set when the gap is below degeneracy_tol.
GroundState ground_state(const Spectrum& spectrum, double degeneracy_tol = 1e-9);

}  // namespace triq
