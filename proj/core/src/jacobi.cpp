#include "triq/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "triq/error.hpp"

namespace triq {

SymMat SymMat::zero(int n) {
  SymMat m;
  m.n = n;
  return m;
}

SymMat SymMat::identity(int n) {
  SymMat m = zero(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

double frobenius(const SymMat& m) {
  double s = 0.0;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) s += m.at(i, j) * m.at(i, j);
  return std::sqrt(s);
}

double offdiag_frobenius(const SymMat& m) {
  double s = 0.0;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (i != j) s += m.at(i, j) * m.at(i, j);
  return std::sqrt(s);
}

double max_abs(const SymMat& m) {
  double v = 0.0;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) v = std::max(v, std::abs(m.at(i, j)));
  return v;
}

namespace {

// One Jacobi rotation zeroing a(p,q), p < q, applied symmetrically and
// accumulated into the eigenvector matrix v.
void rotate(SymMat& a, SymMat& v, int p, int q) {
  const double apq = a.at(p, q);
  if (apq == 0.0) return;
  const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
  // Stable tangent of the half-rotation: t = sgn(theta) / (|theta| + sqrt(theta^2 + 1)).
  double t;
  if (std::abs(theta) > 1e150) {
    t = 1.0 / (2.0 * theta);  // avoid theta^2 overflow
  } else {
    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const double tau = s / (1.0 + c);

  const double app = a.at(p, p);
  const double aqq = a.at(q, q);
  a.at(p, p) = app - t * apq;
  a.at(q, q) = aqq + t * apq;
  a.at(p, q) = 0.0;
  a.at(q, p) = 0.0;
  for (int i = 0; i < a.n; ++i) {
    if (i == p || i == q) continue;
    const double aip = a.at(i, p);
    const double aiq = a.at(i, q);
    a.at(i, p) = aip - s * (aiq + tau * aip);
    a.at(p, i) = a.at(i, p);
    a.at(i, q) = aiq + s * (aip - tau * aiq);
    a.at(q, i) = a.at(i, q);
  }
  for (int i = 0; i < v.n; ++i) {
    const double vip = v.at(i, p);
    const double viq = v.at(i, q);
    v.at(i, p) = vip - s * (viq + tau * vip);
    v.at(i, q) = viq + s * (vip - tau * viq);
  }
}

}  // namespace

EigenSystem jacobi_eigh(const SymMat& m) {
  const int n = m.n;
  SymMat a = m;
  SymMat v = SymMat::identity(n);

  const double norm = frobenius(m);
  const double target = 1e-13 * std::max(1e-300, norm);
  constexpr int kMaxSweeps = 50;

  double off = offdiag_frobenius(a);
  int sweep = 0;
  while (off > target && sweep < kMaxSweeps) {
    // Threshold pivoting: during the first sweeps only rotate elements that
    // are non-negligible relative to the remaining off-diagonal mass; later
    // sweeps rotate everything nonzero.
    const double thresh = (sweep < 3) ? 0.2 * off * off / (n * n) : 0.0;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a.at(p, q)) > thresh) rotate(a, v, p, q);
      }
    }
    off = offdiag_frobenius(a);
    ++sweep;
  }
  if (off > target) {
    fail(errc::numeric_convergence,
         "jacobi sweep cap reached, off-diagonal residual " + std::to_string(off));
  }

  // Ascending sort; ties keep original diagonal order so the decomposition is
  // deterministic for degenerate spectra.
  std::array<int, 8> order{};
  std::iota(order.begin(), order.begin() + n, 0);
  std::sort(order.begin(), order.begin() + n, [&](int x, int y) {
    if (a.at(x, x) != a.at(y, y)) return a.at(x, x) < a.at(y, y);
    return x < y;
  });

  EigenSystem out;
  out.n = n;
  for (int k = 0; k < n; ++k) {
    out.values[k] = a.at(order[k], order[k]);
    for (int i = 0; i < n; ++i) out.vec(i, k) = v.at(i, order[k]);
  }
  return out;
}

}  // namespace triq
