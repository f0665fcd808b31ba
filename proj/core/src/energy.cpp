#include "dipolechain/energy.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "dipolechain/errors.hpp"
#include "dipolechain/gaussian.hpp"

namespace dipolechain {

double binding_energy(const ModeSpectrum& spectrum, std::span<const Frequency> traps) {
  if (spectrum.size() != traps.size())
    throw DomainError("spectrum and trap list differ in length");
  // Pairing sorted lists keeps each difference small before summing.
  std::vector<Frequency> sorted(traps.begin(), traps.end());
  std::sort(sorted.begin(), sorted.end());
  double sum = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    sum += spectrum.frequencies[i].peta() - sorted[i].peta();
  return 0.5 * constants::reduced_planck * sum * kFrequencyUnit;
}

double asymptotic_witness(Frequency omega0, double k_eff, Direction direction) {
  if (omega0.peta() <= 0.0) throw DomainError("trap frequency must be positive");
  const double ratio = k_eff / omega0.squared();
  return direction == Direction::Z ? -2.0 * ratio : -ratio;
}

double asymptotic_binding_energy(std::size_t n_sites, Frequency omega0, double witness) {
  if (n_sites < 1) throw DomainError("chain needs at least one site");
  return -static_cast<double>(n_sites) * constants::reduced_planck * omega0.rad_per_s() * witness *
         witness / 8.0;
}

BindingEnergyResult compare_binding_energy(std::size_t n_sites, Frequency omega0, double k_eff,
                                           Direction direction) {
  const std::vector<Frequency> traps(n_sites, omega0);
  const auto spectrum =
      numeric_modes(build_coupling_matrix(traps, k_eff, direction, Boundary::Periodic));
  const auto moments = thermal_moments(spectrum, 0.0);
  const std::size_t mid = n_sites / 2;
  const auto crit = pair_criteria(moments, mid - 1, mid);

  BindingEnergyResult out;
  out.exact = binding_energy(spectrum, traps);
  out.s_witness = direction == Direction::Z ? crit.s2 : crit.s1;
  out.asymptotic = asymptotic_binding_energy(n_sites, omega0, out.s_witness);
  out.relative_gap = out.exact != 0.0 ? std::abs(out.exact - out.asymptotic) / std::abs(out.exact)
                                      : std::abs(out.asymptotic);
  return out;
}

}  // namespace dipolechain
