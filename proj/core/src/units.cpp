#include "dipolechain/units.hpp"

#include <cmath>
#include <string>

#include "dipolechain/errors.hpp"

namespace dipolechain {

namespace {

using namespace constants;

// e^2 / m_e, the charge-to-mass factor every frequency formula shares.
constexpr double kChargeSquaredOverMass = elementary_charge * elementary_charge / electron_mass;

void require_electrons(int n) {
  if (n < 1) throw DomainError("electron count must be >= 1, got " + std::to_string(n));
}

}  // namespace

Frequency Frequency::from_peta(double value) {
  if (!std::isfinite(value) || value < 0.0)
    throw DomainError("frequency must be finite and non-negative, got " + std::to_string(value));
  return Frequency(value);
}

Frequency Frequency::from_squared(double squared) {
  if (!std::isfinite(squared) || squared < 0.0)
    throw DomainError("negative squared frequency " + std::to_string(squared) + " (1e30 s^-2)");
  return Frequency(std::sqrt(squared));
}

Frequency trapping_frequency(double alpha_au, int n_electrons) {
  if (!(alpha_au > 0.0) || !std::isfinite(alpha_au))
    throw DomainError("polarizability must be positive, got " + std::to_string(alpha_au));
  require_electrons(n_electrons);
  const double alpha_si = alpha_au * atomic_polarizability_unit;
  return Frequency::from_rad_per_s(std::sqrt(n_electrons * kChargeSquaredOverMass / alpha_si));
}

double polarizability_from_frequency(Frequency omega, int n_electrons) {
  require_electrons(n_electrons);
  if (omega.peta() <= 0.0) throw DomainError("frequency must be positive");
  const double w = omega.rad_per_s();
  return n_electrons * kChargeSquaredOverMass / (w * w) / atomic_polarizability_unit;
}

double coupling_constant(double spacing_m, double epsilon, int n_electrons) {
  if (!(spacing_m > 0.0) || !std::isfinite(spacing_m))
    throw DomainError("spacing must be positive, got " + std::to_string(spacing_m));
  if (!(epsilon > 0.0) || !std::isfinite(epsilon))
    throw DomainError("epsilon must be positive, got " + std::to_string(epsilon));
  require_electrons(n_electrons);
  const double r3 = spacing_m * spacing_m * spacing_m;
  const double k_si = std::sqrt(epsilon) * n_electrons * kChargeSquaredOverMass /
                      (4.0 * pi * vacuum_permittivity * r3);
  return k_si / (kFrequencyUnit * kFrequencyUnit);
}

double spacing_for_coupling(double k_eff, double epsilon, int n_electrons) {
  if (!(k_eff > 0.0)) throw DomainError("coupling must be positive");
  // K scales as r^-3, so invert from the unit-spacing value.
  const double k_at_1m = coupling_constant(1.0, epsilon, n_electrons);
  return std::cbrt(k_at_1m / k_eff);
}

double thermal_ratio(double temperature_k, Frequency omega) {
  if (!(temperature_k >= 0.0) || !std::isfinite(temperature_k))
    throw DomainError("temperature must be >= 0 K, got " + std::to_string(temperature_k));
  if (omega.peta() <= 0.0) throw DomainError("thermal ratio undefined for zero frequency");
  return 2.0 * boltzmann * temperature_k / (reduced_planck * omega.rad_per_s());
}

}  // namespace dipolechain
