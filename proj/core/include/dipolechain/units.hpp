#pragma once

// Physical constants and the elementary frequency formulas of the
// dipole-coupled oscillator model.
//
// Frequencies are carried internally in units of 1e15 rad/s and squared
// frequencies in 1e30 s^-2. SI values appear only at the I/O boundary.

#include <compare>

namespace dipolechain {

namespace constants {
// CODATA 2018 (exact where SI defines them).
inline constexpr double elementary_charge = 1.602176634e-19;      // C
inline constexpr double electron_mass = 9.1093837015e-31;         // kg
inline constexpr double vacuum_permittivity = 8.8541878128e-12;   // F/m
inline constexpr double reduced_planck = 1.054571817e-34;         // J s
inline constexpr double boltzmann = 1.380649e-23;                 // J/K
inline constexpr double pi = 3.14159265358979323846;

// Polarizability unit used by the base table: 1 au = 0.164e-40 F m^2.
inline constexpr double atomic_polarizability_unit = 0.164e-40;

inline constexpr double angstrom = 1e-10;        // m
inline constexpr double electron_volt = 1.602176634e-19;  // J
}  // namespace constants

/// Scale between the internal frequency unit and rad/s.
inline constexpr double kFrequencyUnit = 1e15;

/// Angular frequency. Stored in units of 1e15 rad/s; never negative.
class Frequency {
 public:
  constexpr Frequency() = default;

  /// Throws DomainError for negative or non-finite input.
  static Frequency from_peta(double value_1e15_rad_s);
  static Frequency from_rad_per_s(double value) { return from_peta(value / kFrequencyUnit); }
  /// Square root of a squared frequency (1e30 s^-2); negative input is a
  /// DomainError rather than a NaN.
  static Frequency from_squared(double squared_1e30);

  constexpr double peta() const noexcept { return value_; }
  constexpr double rad_per_s() const noexcept { return value_ * kFrequencyUnit; }
  constexpr double squared() const noexcept { return value_ * value_; }

  friend constexpr auto operator<=>(const Frequency&, const Frequency&) = default;

 private:
  constexpr explicit Frequency(double v) : value_(v) {}
  double value_ = 0.0;
};

/// Trapping frequency of an electron cloud with polarizability alpha (au),
/// Omega = sqrt(n e^2 / (m_e alpha)).
Frequency trapping_frequency(double alpha_au, int n_electrons = 1);

/// Inverse of trapping_frequency: polarizability in au.
double polarizability_from_frequency(Frequency omega, int n_electrons = 1);

/// Nearest-neighbour dipole coupling strength
/// K_eff = sqrt(epsilon) n e^2 / (4 pi eps0 m_e r^3), in 1e30 s^-2.
double coupling_constant(double spacing_m, double epsilon = 1.0, int n_electrons = 1);

/// Spacing (m) at which coupling_constant equals k_eff; inverse of the 1/r^3 law.
double spacing_for_coupling(double k_eff, double epsilon = 1.0, int n_electrons = 1);

/// 2 k_B T / (hbar omega). Entanglement is expected to survive while this is below 1.
double thermal_ratio(double temperature_k, Frequency omega);

}  // namespace dipolechain
