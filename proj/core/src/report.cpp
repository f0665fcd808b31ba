#include "dipolechain/report.hpp"

#include "dipolechain/energy.hpp"

namespace dipolechain {

double EntanglementReport::mean_entropy() const noexcept {
  if (sites.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& s : sites) sum += s.entropy;
  return sum / static_cast<double>(sites.size());
}

EntanglementReport analyze_chain(const ChainSpec& spec, Frequency omega_ref) {
  EntanglementReport report;
  const auto traps = trap_frequencies(spec);
  report.spectrum = numeric_modes(build_coupling_matrix(spec));
  const auto moments = thermal_moments(report.spectrum, spec.temperature_k, omega_ref);

  const std::size_t n = spec.size();
  const std::size_t n_pairs = spec.boundary == Boundary::Periodic ? n : n - 1;
  report.pairs.reserve(n_pairs);
  for (std::size_t j = 0; j < n_pairs; ++j) {
    PairEntanglement p;
    p.first = j;
    p.second = (j + 1) % n;
    p.criteria = pair_criteria(moments, p.first, p.second);
    p.negativity = negativity(p.criteria);
    report.pairs.push_back(p);
  }
  report.sites.reserve(n);
  for (std::size_t j = 0; j < n; ++j) report.sites.push_back(single_site_entropy(moments, j));
  report.binding_energy_j = binding_energy(report.spectrum, traps);
  return report;
}

}  // namespace dipolechain
