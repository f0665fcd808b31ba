#include "dipolechain/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dipolechain/errors.hpp"

namespace dipolechain {

namespace {

[[noreturn]] void throw_unstable(double omega_sq, std::size_t index) {
  std::ostringstream msg;
  msg << "chain unstable at this spacing: mode " << index << " has omega^2 = " << omega_sq
      << " (1e30 s^-2)";
  throw InstabilityError(msg.str(), omega_sq, index);
}

double lowest_eigenvalue(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

}  // namespace

Frequency analytic_dispersion(Frequency omega0, double k_eff, std::size_t n, Direction direction,
                              std::size_t l) {
  if (n < 1 || l < 1 || l > n) throw DomainError("mode index must lie in 1..N");
  const double phase = constants::pi * static_cast<double>(l) / static_cast<double>(n);
  double w2 = 0.0;
  if (direction == Direction::Z) {
    const double s = std::sin(phase);
    w2 = omega0.squared() + 4.0 * (2.0 * s * s - 1.0) * k_eff;
  } else {
    const double c = std::cos(phase);
    w2 = omega0.squared() + 2.0 * (2.0 * c * c - 1.0) * k_eff;
  }
  if (!(w2 > 0.0)) throw_unstable(w2, l);
  return Frequency::from_squared(w2);
}

std::vector<Frequency> analytic_spectrum(Frequency omega0, double k_eff, std::size_t n,
                                         Direction direction) {
  std::vector<Frequency> out;
  out.reserve(n);
  for (std::size_t l = 1; l <= n; ++l) out.push_back(analytic_dispersion(omega0, k_eff, n, direction, l));
  std::sort(out.begin(), out.end());
  return out;
}

ModeSpectrum numeric_modes(const CouplingMatrix& v) {
  const auto n = v.values.rows();
  if (n == 0 || v.values.cols() != n) throw DomainError("coupling matrix must be square and non-empty");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(v.values);
  if (solver.info() != Eigen::Success) throw DomainError("eigensolver failed to converge");

  // Eigen returns eigenvalues in ascending order.
  const auto& evals = solver.eigenvalues();
  ModeSpectrum out;
  out.frequencies.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index l = 0; l < n; ++l) {
    if (!(evals(l) > 0.0)) throw_unstable(evals(l), static_cast<std::size_t>(l));
    out.frequencies.push_back(Frequency::from_squared(evals(l)));
  }

  out.modes = solver.eigenvectors();
  for (Eigen::Index l = 0; l < n; ++l) {
    auto col = out.modes.col(l);
    Eigen::Index pivot = 0;
    double best = -1.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      // Strictly-greater keeps the lowest index among near-equal magnitudes.
      const double mag = std::abs(col(j));
      if (mag > best * (1.0 + 1e-12)) {
        best = mag;
        pivot = j;
      }
    }
    if (col(pivot) < 0.0) col = -col;
  }
  return out;
}

Frequency min_frequency(const ChainSpec& spec) {
  return numeric_modes(build_coupling_matrix(spec)).frequencies.front();
}

double instability_spacing(const ChainSpec& spec) {
  spec.validate();
  return instability_spacing(trap_frequencies(spec), spec.epsilon, spec.direction, spec.boundary,
                             spec.n_electrons);
}

double instability_spacing(std::span<const Frequency> traps, double epsilon, Direction direction,
                           Boundary boundary, int n_electrons) {
  // Unit-coupling pattern: V(K) = diag(Omega^2) + K * pattern.
  const CouplingMatrix base = build_coupling_matrix(traps, 0.0, direction, boundary);
  const CouplingMatrix unit = build_coupling_matrix(traps, 1.0, direction, boundary);
  const Eigen::MatrixXd pattern = unit.values - base.values;

  double lo = 0.0;
  double hi = 1.0;
  while (lowest_eigenvalue(base.values + hi * pattern) > 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e12) throw DomainError("chain is stable for every spacing");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (lowest_eigenvalue(base.values + mid * pattern) > 0.0 ? lo : hi) = mid;
  }
  return spacing_for_coupling(0.5 * (lo + hi), epsilon, n_electrons);
}

}  // namespace dipolechain
