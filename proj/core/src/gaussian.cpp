#include "dipolechain/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dipolechain/errors.hpp"

namespace dipolechain {

namespace {

constexpr double kCothCutoff = 20.0;
constexpr double kPuritySlack = 1e-9;

void require_site(const SecondMoments& m, std::size_t j) {
  if (j >= m.size())
    throw DomainError("site index " + std::to_string(j) + " out of range for chain of " +
                      std::to_string(m.size()));
}

}  // namespace

double thermal_occupation_factor(Frequency omega, double temperature_k) {
  if (!(temperature_k >= 0.0)) throw DomainError("temperature must be >= 0 K");
  if (temperature_k == 0.0) return 1.0;
  const double x = constants::reduced_planck * omega.rad_per_s() /
                   (2.0 * constants::boltzmann * temperature_k);
  if (x > kCothCutoff) return 1.0;
  return 1.0 / std::tanh(x);
}

SecondMoments thermal_moments(const ModeSpectrum& spectrum, double temperature_k,
                              Frequency omega_ref) {
  if (omega_ref.peta() <= 0.0) throw DomainError("reference frequency must be positive");
  const auto n = static_cast<Eigen::Index>(spectrum.size());
  Eigen::VectorXd x_weight(n);
  Eigen::VectorXd p_weight(n);
  for (Eigen::Index l = 0; l < n; ++l) {
    const Frequency w = spectrum.frequencies[static_cast<std::size_t>(l)];
    const double occ = thermal_occupation_factor(w, temperature_k);
    x_weight(l) = occ * omega_ref.peta() / w.peta();
    p_weight(l) = occ * w.peta() / omega_ref.peta();
  }
  const auto& u = spectrum.modes;
  SecondMoments m;
  m.omega_ref = omega_ref;
  m.position = u * x_weight.asDiagonal() * u.transpose();
  m.momentum = u * p_weight.asDiagonal() * u.transpose();
  return m;
}

PairCriteria pair_criteria(const SecondMoments& m, std::size_t j, std::size_t k) {
  require_site(m, j);
  require_site(m, k);
  if (j == k) throw DomainError("pair criteria need two distinct sites");
  const auto a = static_cast<Eigen::Index>(j);
  const auto b = static_cast<Eigen::Index>(k);
  const double xs = m.position(a, a) + m.position(b, b);
  const double ps = m.momentum(a, a) + m.momentum(b, b);
  const double xc = 2.0 * m.position(a, b);
  const double pc = 2.0 * m.momentum(a, b);
  return {0.25 * (xs + xc) * (ps - pc) - 1.0, 0.25 * (xs - xc) * (ps + pc) - 1.0};
}

double negativity(double s1, double s2) {
  if (!(s1 > -1.0) || !(s2 > -1.0))
    throw DomainError("criteria must exceed -1 (unphysical moments)");
  return std::max(0.0, -0.5 * std::log1p(s1)) + std::max(0.0, -0.5 * std::log1p(s2));
}

double von_neumann_entropy(double r) {
  if (!(r >= 1.0 - kPuritySlack) || !std::isfinite(r))
    throw DomainError("symplectic eigenvalue " + std::to_string(r) + " below 1");
  if (r <= 1.0) return 0.0;
  const double plus = 0.5 * (r + 1.0);
  const double minus = 0.5 * (r - 1.0);
  return plus * std::log(plus) - minus * std::log(minus);
}

SiteEntropy single_site_entropy(const SecondMoments& m, std::size_t j) {
  require_site(m, j);
  const auto a = static_cast<Eigen::Index>(j);
  double r = std::sqrt(m.position(a, a) * m.momentum(a, a));
  if (r < 1.0 - kPuritySlack)
    throw DomainError("site " + std::to_string(j) + " violates the uncertainty bound (r = " +
                      std::to_string(r) + ")");
  r = std::max(r, 1.0);
  return {r, von_neumann_entropy(r)};
}

}  // namespace dipolechain
