#pragma once

#include <array>
#include <string>
#include <string_view>

#include "triq/jacobi.hpp"

namespace triq {

// Real symmetric density matrix over 1-3 labeled qubits (d = 2, 4 or 8).
// labels lists the qubits in bit order, most significant first: for labels
// "ABC", basis index = 4 s_A + 2 s_B + s_C, matching the Hamiltonian basis.
struct DensityMatrix {
  SymMat m;
  std::string labels;

  int nqubits() const { return static_cast<int>(labels.size()); }

  // |amps><amps| over labels "ABC". The input need not be normalized.
  static DensityMatrix pure(const std::array<double, 8>& amps);

  // Validating constructor: trace 1 to 1e-12, symmetric, eigenvalues
  // >= -1e-10. Throws errc::invalid_parameter on violation.
  static DensityMatrix checked(const SymMat& m, std::string labels);

  void validate() const;
};

// Reduced density matrix over the kept qubits (keep is a subsequence of
// rho.labels, e.g. "AB" or "B"); trace is preserved.
DensityMatrix partial_trace(const DensityMatrix& rho, std::string_view keep);

// Transpose of the chosen qubit's bra/ket indices. Result is symmetric but in
// general not PSD, hence a plain matrix.
SymMat partial_transpose(const DensityMatrix& rho, char transposed);

}  // namespace triq
