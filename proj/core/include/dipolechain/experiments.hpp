#pragma once

// Seeded drivers that regenerate the negativity-vs-distance curves, the
// random-sequence entropy ensemble and the neighbour-dependence table.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dipolechain/model.hpp"
#include "dipolechain/units.hpp"

namespace dipolechain {

// ---------------------------------------------------------------------------
// Negativity vs spacing

struct ScanConfig {
  double epsilon = 1.0;
  Direction direction = Direction::X;
  Frequency omega0 = Frequency::from_peta(4.0);
};

/// The five curves of the distance scan: eps = 1 for z/6, x/4, x/3 and
/// eps = 0.01 for z/6, x/4 (trap frequencies in 1e15 rad/s).
std::vector<ScanConfig> default_scan_configs();

struct ScanPoint {
  double spacing_m = 0.0;
  double epsilon = 1.0;
  Direction direction = Direction::X;
  Frequency omega0;
  double s1 = 0.0;
  double s2 = 0.0;
  double negativity = 0.0;
};

struct ScanCurve {
  ScanConfig config;
  std::vector<ScanPoint> points;
  /// Set when a grid point was unstable; the curve is then empty.
  std::optional<std::string> diagnostic;
};

struct ScanParams {
  double r_min_m = 4.0 * constants::angstrom;
  double r_max_m = 8.0 * constants::angstrom;
  std::size_t steps = 41;
  std::size_t n_sites = 50;
  double temperature_k = 300.0;
};

/// Middle-pair negativity of a uniform periodic chain on an evenly spaced
/// grid of spacings, one curve per config. Instability aborts only the
/// affected curve.
std::vector<ScanCurve> negativity_scan(const ScanParams& params, std::span<const ScanConfig> configs);

/// Single point of the scan (throws InstabilityError).
ScanPoint scan_point(const ScanConfig& config, double spacing_m, std::size_t n_sites,
                     double temperature_k);

// ---------------------------------------------------------------------------
// Shannon entropy and the random-sequence ensemble

struct ShannonEntropy {
  double nats = 0.0;
  double bits = 0.0;
};

/// Entropy of the empirical A/C/G/T frequencies (0 ln 0 = 0).
ShannonEntropy shannon_entropy(std::span<const BaseKind> sequence);

/// Substream seed of string `index`:
///   splitmix64(master_seed ^ splitmix64(index)).
std::uint64_t substream_seed(std::uint64_t master_seed, std::uint64_t index) noexcept;

/// Uniform i.i.d. bases from a mt19937_64 stream seeded with `seed`; each
/// base takes the top two bits of one 64-bit draw.
std::vector<BaseKind> random_sequence(std::uint64_t seed, std::size_t length);

struct EnsembleRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::vector<BaseKind> sequence;
  double shannon_nats = 0.0;
  double shannon_bits = 0.0;
  double mean_entropy = 0.0;  ///< mean single-site vNE over all sites, nats
  Frequency min_frequency;
  std::optional<std::string> error;  ///< instability of this record
};

struct EnsembleParams {
  std::size_t n_strings = 1000;
  std::size_t length = 50;
  double spacing_m = 4.5 * constants::angstrom;
  double epsilon = 1.0;
  Direction direction = Direction::X;
  double temperature_k = 300.0;
  std::uint64_t master_seed = 42;
};

/// Open-boundary random chains, returned in string-index order.
std::vector<EnsembleRecord> ensemble_entropy(const EnsembleParams& params);

// ---------------------------------------------------------------------------
// Neighbour dependence of a single site

struct NeighborParams {
  double spacing_m = 4.5 * constants::angstrom;
  double epsilon = 1.0;
  Direction direction = Direction::X;
};

/// vNE of site 9 (1-based) of a 17-site open adenine chain whose sites 8
/// and 10 are replaced by `left` and `right`. Ground state.
double neighbor_entropy(BaseKind left, BaseKind right, const NeighborParams& params = {});

/// table[right][left], matching the layout rows = site 10, columns = site 8.
using NeighborTable = std::array<std::array<double, 4>, 4>;
NeighborTable neighbor_table(const NeighborParams& params = {});

}  // namespace dipolechain
