#include "triq/model.hpp"

#include <cmath>
#include <string>

#include "triq/error.hpp"

namespace triq {

void CouplingConfig::validate() const {
  if (!std::isfinite(j) || !std::isfinite(h) || !std::isfinite(eta) || !std::isfinite(omega))
    fail(errc::invalid_config, "non-finite model parameter");
  if (eta < 0.0) fail(errc::invalid_config, "eta must be >= 0, got " + std::to_string(eta));
  if (omega < 0.0) fail(errc::invalid_config, "omega must be >= 0, got " + std::to_string(omega));
  if (h <= 0.0) fail(errc::invalid_config, "h must be > 0, got " + std::to_string(h));
}

HermitianOp8 build_hamiltonian(const CouplingConfig& config) {
  config.validate();
  HermitianOp8 op;
  op.m = SymMat::zero(8);

  // Field term: diagonal, sum of sigma^z parities.
  for (int idx = 0; idx < 8; ++idx) {
    const int sa = (idx >> 2) & 1, sb = (idx >> 1) & 1, sc = idx & 1;
    const double parity = (sa ? -1.0 : 1.0) + (sb ? -1.0 : 1.0) + (sc ? -1.0 : 1.0);
    op.m.at(idx, idx) = config.h * parity;
  }
  // sigma^x sigma^x couplings flip the two spins of a bond: each bond pairs
  // idx with idx xor mask, mask having the two bond bits set.
  for (int idx = 0; idx < 8; ++idx) {
    op.m.at(idx, idx ^ 0b110) += config.j;                 // A-B bond
    op.m.at(idx, idx ^ 0b011) += config.j * config.omega;  // B-C bond
    op.m.at(idx, idx ^ 0b101) += config.j * config.eta;    // C-A bond
  }
  return op;
}

Spectrum eigendecompose(const HermitianOp8& op) {
  const EigenSystem es = jacobi_eigh(op.m);
  Spectrum s;
  s.vectors = SymMat::zero(8);
  for (int k = 0; k < 8; ++k) {
    s.energies[k] = es.values[k];
    for (int i = 0; i < 8; ++i) s.vectors.at(i, k) = es.vec(i, k);
  }
  s.gap = s.energies[1] - s.energies[0];
  return s;
}

GroundState ground_state(const Spectrum& spectrum, double degeneracy_tol) {
  GroundState g;
  g.degenerate = spectrum.gap < degeneracy_tol;
  for (int i = 0; i < 8; ++i) g.amplitudes[i] = spectrum.vectors.at(i, 0);
  // Gauge fix: first amplitude of non-negligible magnitude made positive.
  for (int i = 0; i < 8; ++i) {
    if (std::abs(g.amplitudes[i]) > 1e-12) {
      if (g.amplitudes[i] < 0.0)
        for (int k = 0; k < 8; ++k) g.amplitudes[k] = -g.amplitudes[k];
      break;
    }
  }
  return g;
}

}  // namespace triq
