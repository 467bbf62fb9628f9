#include "triq/density.hpp"

#include <cmath>
#include <string>

#include "triq/error.hpp"

namespace triq {

namespace {

int label_pos(const std::string& labels, char q) {
  const auto pos = labels.find(q);
  if (pos == std::string::npos)
    fail(errc::invalid_parameter,
         std::string("qubit '") + q + "' not among labels \"" + labels + "\"");
  return static_cast<int>(pos);
}

}  // namespace

DensityMatrix DensityMatrix::pure(const std::array<double, 8>& amps) {
  DensityMatrix rho;
  rho.labels = "ABC";
  rho.m = SymMat::zero(8);
  double norm2 = 0.0;
  for (double a : amps) norm2 += a * a;
  if (norm2 <= 0.0) fail(errc::invalid_parameter, "zero state vector");
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) rho.m.at(i, j) = amps[i] * amps[j] / norm2;
  return rho;
}

DensityMatrix DensityMatrix::checked(const SymMat& m, std::string labels) {
  DensityMatrix rho;
  rho.m = m;
  rho.labels = std::move(labels);
  rho.validate();
  return rho;
}

void DensityMatrix::validate() const {
  const int d = 1 << nqubits();
  if (m.n != d)
    fail(errc::invalid_parameter, "dimension does not match label count");
  double tr = 0.0;
  for (int i = 0; i < d; ++i) tr += m.at(i, i);
  if (std::abs(tr - 1.0) > 1e-12)
    fail(errc::invalid_parameter, "trace deviates from 1 by " + std::to_string(tr - 1.0));
  const double scale = std::max(1.0, max_abs(m));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (std::abs(m.at(i, j) - m.at(j, i)) > 1e-12 * scale)
        fail(errc::invalid_parameter, "matrix not symmetric");
  const EigenSystem es = jacobi_eigh(m);
  if (es.values[0] < -1e-10)
    fail(errc::invalid_parameter,
         "negative eigenvalue " + std::to_string(es.values[0]));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::string_view keep) {
  const int nq = rho.nqubits();
  int keep_pos[3], nkeep = 0;
  for (char q : keep) keep_pos[nkeep++] = label_pos(rho.labels, q);
  int traced_pos[3], ntr = 0;
  for (int p = 0; p < nq; ++p) {
    bool kept = false;
    for (int k = 0; k < nkeep; ++k) kept = kept || (keep_pos[k] == p);
    if (!kept) traced_pos[ntr++] = p;
  }

  DensityMatrix out;
  out.labels.assign(keep.begin(), keep.end());
  out.m = SymMat::zero(1 << nkeep);
  // Map a kept-index r and traced-index t to a full basis index: each label
  // position p holds bit (nq-1-p) of the full index.
  auto full_index = [&](int r, int t) {
    int idx = 0;
    for (int k = 0; k < nkeep; ++k) {
      const int bit = (r >> (nkeep - 1 - k)) & 1;
      idx |= bit << (nq - 1 - keep_pos[k]);
    }
    for (int k = 0; k < ntr; ++k) {
      const int bit = (t >> k) & 1;
      idx |= bit << (nq - 1 - traced_pos[k]);
    }
    return idx;
  };
  for (int r = 0; r < (1 << nkeep); ++r)
    for (int c = 0; c < (1 << nkeep); ++c) {
      double sum = 0.0;
      for (int t = 0; t < (1 << ntr); ++t)
        sum += rho.m.at(full_index(r, t), full_index(c, t));
      out.m.at(r, c) = sum;
    }
  return out;
}

SymMat partial_transpose(const DensityMatrix& rho, char transposed) {
  const int nq = rho.nqubits();
  const int bit = nq - 1 - label_pos(rho.labels, transposed);
  const int d = rho.m.n;
  SymMat out = SymMat::zero(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const int ib = (i >> bit) & 1;
      const int jb = (j >> bit) & 1;
      const int i2 = (i & ~(1 << bit)) | (jb << bit);
      const int j2 = (j & ~(1 << bit)) | (ib << bit);
      out.at(i2, j2) = rho.m.at(i, j);
    }
  return out;
}

}  // namespace triq
