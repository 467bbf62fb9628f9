#pragma once

#include <array>
#include <cstddef>

namespace triq {

// Dense real-symmetric matrix with fixed 8x8 capacity. Dimensions actually
// used are 2, 4 and 8 (qubit subsystems), so a stack array beats any dynamic
// representation and keeps every operation allocation-free.
struct SymMat {
  int n = 0;
  std::array<double, 64> a{};  // row-major, only the leading n x n block is live

  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

  static SymMat zero(int n);
  static SymMat identity(int n);
};

double frobenius(const SymMat& m);
double offdiag_frobenius(const SymMat& m);
double max_abs(const SymMat& m);

// Full eigensystem of a SymMat: values ascending, vectors holds the
// corresponding orthonormal eigenvectors as columns (vec(i, k) is component i
// of eigenvector k).
struct EigenSystem {
  int n = 0;
  std::array<double, 8> values{};
  std::array<double, 64> vectors{};

  double vec(int i, int k) const { return vectors[static_cast<std::size_t>(i) * n + k]; }
  double& vec(int i, int k) { return vectors[static_cast<std::size_t>(i) * n + k]; }
};

// Cyclic Jacobi with threshold pivoting: row-major sweeps over the strict
// upper triangle, rotations skipped below a threshold that is nonzero only in
// the first sweeps. Converges when the off-diagonal Frobenius norm drops
// below 1e-13 * ||m||_F; throws errc::numeric_convergence (carrying the
// residual in the message) if 50 sweeps do not get there. Output is a pure
// function of the input: fixed rotation order, ties in the final ascending
// sort broken by original index.
EigenSystem jacobi_eigh(const SymMat& m);

}  // namespace triq
