#pragma once

#include <span>

#include "dipolechain/model.hpp"
#include "dipolechain/spectrum.hpp"
#include "dipolechain/units.hpp"

namespace dipolechain {

/// Ground-state binding energy (J): (hbar/2) (sum_l omega_l - sum_j Omega_j).
/// Negative for any coupled stable chain.
double binding_energy(const ModeSpectrum& spectrum, std::span<const Frequency> trap_frequencies);

/// Leading large-distance value of the violated separability criterion of
/// a uniform chain: S2 = -2 K / Omega^2 along z, S1 = -K / Omega^2 for x and y.
double asymptotic_witness(Frequency omega0, double k_eff, Direction direction);

/// -n hbar Omega S^2 / 8, in J.
double asymptotic_binding_energy(std::size_t n_sites, Frequency omega0, double witness);

struct BindingEnergyResult {
  double exact = 0.0;       ///< J
  double asymptotic = 0.0;  ///< J
  double s_witness = 0.0;   ///< numeric ground-state S fed into the asymptotic law
  double relative_gap = 0.0;
};

/// Exact vs asymptotic binding energy of a uniform periodic chain with
/// trap omega0. The witness is the violated criterion (S2 for z, S1
/// otherwise) of the middle adjacent pair in the ground state.
BindingEnergyResult compare_binding_energy(std::size_t n_sites, Frequency omega0, double k_eff,
                                           Direction direction);

inline double joules_to_ev(double joules) { return joules / constants::electron_volt; }

}  // namespace dipolechain
