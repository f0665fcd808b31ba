#pragma once

// Independent reference computations used only by tests. Nothing here
// calls into the library's eigensolver or moment code.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

struct Eigen {
  std::vector<double> values;  // ascending
  Matrix vectors;              // vectors[i] is the eigenvector of values[i]
};

/// Cyclic Jacobi rotations on a dense symmetric matrix.
inline Eigen jacobi(Matrix a) {
  const std::size_t n = a.size();
  Matrix v(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    double diag = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      diag += a[p][p] * a[p][p];
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    }
    if (off <= 1e-34 * diag) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto i, auto j) { return a[i][i] < a[j][j]; });
  Eigen out;
  for (auto i : order) {
    out.values.push_back(a[i][i]);
    std::vector<double> col(n);
    for (std::size_t k = 0; k < n; ++k) col[k] = v[k][i];
    out.vectors.push_back(col);
  }
  return out;
}

/// Tridiagonal (+ corners) coupling matrix built by hand, in 1e30 s^-2.
inline Matrix chain_matrix(const std::vector<double>& omega, double offdiag, bool periodic) {
  const std::size_t n = omega.size();
  Matrix m(n, std::vector<double>(n, 0.0));
  for (std::size_t j = 0; j < n; ++j) m[j][j] = omega[j] * omega[j];
  for (std::size_t j = 0; j + 1 < n; ++j) m[j][j + 1] = m[j + 1][j] = offdiag;
  if (periodic) m[0][n - 1] = m[n - 1][0] = offdiag;
  return m;
}

/// Two identical sites with coupling +K (x direction), ground state.
/// V = [[W^2, K], [K, W^2]] has the symmetric mode (1,1)/sqrt2 at W^2 + K
/// and the antisymmetric mode (1,-1)/sqrt2 at W^2 - K.
struct TwoMode {
  double w_plus, w_minus;
  TwoMode(double omega, double k) : w_plus(std::sqrt(omega * omega + k)), w_minus(std::sqrt(omega * omega - k)) {}

  double x11(double ref) const { return 0.5 * ref * (1.0 / w_plus + 1.0 / w_minus); }
  double x12(double ref) const { return 0.5 * ref * (1.0 / w_plus - 1.0 / w_minus); }
  double p11(double ref) const { return 0.5 * (w_plus + w_minus) / ref; }
  double p12(double ref) const { return 0.5 * (w_plus - w_minus) / ref; }
  double s1() const { return w_minus / w_plus - 1.0; }
  double s2() const { return w_plus / w_minus - 1.0; }
  /// (hbar/2)(w+ + w- - 2 W) in units of hbar * 1e15 rad/s.
  double binding_over_hbar(double omega) const { return 0.5 * (w_plus + w_minus - 2.0 * omega); }
};

/// coth by its definition, for checking the large-temperature expansion.
inline double coth_direct(double x) { return std::cosh(x) / std::sinh(x); }

inline double rel(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace oracle
