#pragma once

#include <cstddef>
#include <vector>

#include "dipolechain/gaussian.hpp"
#include "dipolechain/model.hpp"
#include "dipolechain/spectrum.hpp"

namespace dipolechain {

struct PairEntanglement {
  std::size_t first = 0;
  std::size_t second = 0;
  PairCriteria criteria;
  double negativity = 0.0;  ///< nats
};

/// Everything measured on one chain: adjacent-pair criteria (including the
/// wrap-around pair when periodic), per-site entropies, and the ground-state
/// binding energy.
struct EntanglementReport {
  ModeSpectrum spectrum;
  std::vector<PairEntanglement> pairs;
  std::vector<SiteEntropy> sites;
  double binding_energy_j = 0.0;

  double mean_entropy() const noexcept;
};

EntanglementReport analyze_chain(const ChainSpec& spec,
                                 Frequency omega_ref = Frequency::from_peta(1.0));

}  // namespace dipolechain
