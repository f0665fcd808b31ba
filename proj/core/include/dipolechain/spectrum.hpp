#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "dipolechain/model.hpp"
#include "dipolechain/units.hpp"

namespace dipolechain {

/// Phonon frequencies (ascending) and the orthogonal mode matrix U with
/// V U = U diag(omega^2). Column l of U is mode l, sign-fixed so that its
/// largest-magnitude component is positive (lowest index wins ties).
struct ModeSpectrum {
  std::vector<Frequency> frequencies;
  Eigen::MatrixXd modes;

  std::size_t size() const noexcept { return frequencies.size(); }
};

/// Dispersion relation of a uniform periodic chain, mode l in 1..n:
///   x, y: omega^2 = Omega^2 + 2 (2 cos^2(pi l/n) - 1) K
///   z:    omega^2 = Omega^2 + 4 (2 sin^2(pi l/n) - 1) K
/// Throws InstabilityError when omega^2 <= 0.
Frequency analytic_dispersion(Frequency omega0, double k_eff, std::size_t n, Direction direction,
                              std::size_t l);

/// All n analytic frequencies, sorted ascending.
std::vector<Frequency> analytic_spectrum(Frequency omega0, double k_eff, std::size_t n,
                                         Direction direction);

/// Dense symmetric eigendecomposition of the coupling matrix.
/// Throws InstabilityError carrying the first non-positive eigenvalue.
ModeSpectrum numeric_modes(const CouplingMatrix& v);

/// Smallest phonon frequency of the chain described by spec.
Frequency min_frequency(const ChainSpec& spec);

/// Spacing (m) below which the chain in spec (its sequence, epsilon,
/// direction, boundary) has a non-positive mode. Solved by bisection on
/// the coupling strength; the lowest eigenvalue is concave in K and
/// positive at K = 0, so the root is unique.
double instability_spacing(const ChainSpec& spec);

double instability_spacing(std::span<const Frequency> traps, double epsilon, Direction direction,
                           Boundary boundary, int n_electrons = 1);

}  // namespace dipolechain
