#pragma once

// Thermal second moments of the harmonic chain and the continuous-variable
// entanglement quantities built from them.
//
// Moments are dimensionless and scaled so that a vacuum mode has
// <x^2><p^2> = 1:
//   X_jk = sum_l (w_ref / w_l) coth(hbar w_l / 2 k_B T) U_jl U_kl
//   P_jk = sum_l (w_l / w_ref) coth(hbar w_l / 2 k_B T) U_jl U_kl
// The reference frequency w_ref cancels in every observable.

#include <cstddef>

#include <Eigen/Dense>

#include "dipolechain/spectrum.hpp"
#include "dipolechain/units.hpp"

namespace dipolechain {

struct SecondMoments {
  Eigen::MatrixXd position;
  Eigen::MatrixXd momentum;
  Frequency omega_ref;

  std::size_t size() const noexcept { return static_cast<std::size_t>(position.rows()); }
};

/// coth(hbar omega / 2 k_B T); exactly 1 at T = 0 and for arguments above 20.
double thermal_occupation_factor(Frequency omega, double temperature_k);

SecondMoments thermal_moments(const ModeSpectrum& spectrum, double temperature_k,
                              Frequency omega_ref = Frequency::from_peta(1.0));

/// Separability criteria of a site pair. A negative value certifies entanglement.
struct PairCriteria {
  double s1 = 0.0;  ///< from <(x_j + x_k)^2><(p_j - p_k)^2>
  double s2 = 0.0;  ///< from <(x_j - x_k)^2><(p_j + p_k)^2>
};

PairCriteria pair_criteria(const SecondMoments& moments, std::size_t j, std::size_t k);

/// sum_k max(0, -ln sqrt(S_k + 1)), in nats. Requires S_k > -1.
double negativity(double s1, double s2);
inline double negativity(const PairCriteria& c) { return negativity(c.s1, c.s2); }

struct SiteEntropy {
  double symplectic = 1.0;  ///< r_j = sqrt(X_jj P_jj); 1 for a pure site
  double entropy = 0.0;     ///< von Neumann entropy, nats
};

/// Entropy of a single-mode Gaussian state with symplectic eigenvalue r,
///   ((r+1)/2) ln((r+1)/2) - ((r-1)/2) ln((r-1)/2).
/// r within 1e-9 below 1 is clamped to 1; lower values throw DomainError.
double von_neumann_entropy(double symplectic);

SiteEntropy single_site_entropy(const SecondMoments& moments, std::size_t j);

}  // namespace dipolechain
