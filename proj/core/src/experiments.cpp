#include "dipolechain/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "dipolechain/errors.hpp"
#include "dipolechain/gaussian.hpp"
#include "dipolechain/report.hpp"
#include "dipolechain/spectrum.hpp"

namespace dipolechain {

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

constexpr std::size_t kNeighborChainLength = 17;
constexpr std::size_t kNeighborSite = 8;  // 0-based index of site 9

}  // namespace

std::vector<ScanConfig> default_scan_configs() {
  const auto f = [](double v) { return Frequency::from_peta(v); };
  return {
      {1.0, Direction::Z, f(6.0)},  {1.0, Direction::X, f(4.0)},  {1.0, Direction::X, f(3.0)},
      {0.01, Direction::Z, f(6.0)}, {0.01, Direction::X, f(4.0)},
  };
}

ScanPoint scan_point(const ScanConfig& config, double spacing_m, std::size_t n_sites,
                     double temperature_k) {
  if (n_sites < 3) throw DomainError("periodic scan chain needs at least 3 sites");
  const std::vector<Frequency> traps(n_sites, config.omega0);
  const double k = coupling_constant(spacing_m, config.epsilon);
  const auto spectrum =
      numeric_modes(build_coupling_matrix(traps, k, config.direction, Boundary::Periodic));
  const auto moments = thermal_moments(spectrum, temperature_k);
  const std::size_t mid = n_sites / 2;
  const auto crit = pair_criteria(moments, mid - 1, mid);
  return {spacing_m, config.epsilon, config.direction, config.omega0,
          crit.s1,   crit.s2,        negativity(crit)};
}

std::vector<ScanCurve> negativity_scan(const ScanParams& params,
                                       std::span<const ScanConfig> configs) {
  if (params.steps < 2) throw DomainError("scan needs at least 2 steps");
  if (!(params.r_min_m > 0.0) || !(params.r_max_m > params.r_min_m))
    throw DomainError("scan range must satisfy 0 < r_min < r_max");

  std::vector<ScanCurve> curves;
  curves.reserve(configs.size());
  const double step = (params.r_max_m - params.r_min_m) / static_cast<double>(params.steps - 1);
  for (const auto& cfg : configs) {
    ScanCurve curve{cfg, {}, std::nullopt};
    try {
      for (std::size_t i = 0; i < params.steps; ++i) {
        const double r = i + 1 == params.steps ? params.r_max_m
                                               : params.r_min_m + step * static_cast<double>(i);
        curve.points.push_back(scan_point(cfg, r, params.n_sites, params.temperature_k));
      }
    } catch (const InstabilityError& e) {
      curve.points.clear();
      curve.diagnostic = e.what();
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

ShannonEntropy shannon_entropy(std::span<const BaseKind> sequence) {
  if (sequence.empty()) throw DomainError("Shannon entropy of an empty sequence");
  const auto counts = base_counts(sequence);
  const double n = static_cast<double>(sequence.size());
  double h = 0.0;
  for (auto c : counts) {
    if (c == 0) continue;
    const double f = static_cast<double>(c) / n;
    h -= f * std::log(f);
  }
  // -0.0 would print with a sign.
  h = h == 0.0 ? 0.0 : h;
  return {h, h / std::log(2.0)};
}

std::uint64_t substream_seed(std::uint64_t master_seed, std::uint64_t index) noexcept {
  return splitmix64(master_seed ^ splitmix64(index));
}

std::vector<BaseKind> random_sequence(std::uint64_t seed, std::size_t length) {
  std::mt19937_64 engine(seed);
  std::vector<BaseKind> seq;
  seq.reserve(length);
  for (std::size_t i = 0; i < length; ++i) seq.push_back(kAllBases[engine() >> 62]);
  return seq;
}

std::vector<EnsembleRecord> ensemble_entropy(const EnsembleParams& params) {
  if (params.n_strings < 1) throw DomainError("ensemble needs at least one string");
  if (params.length < 2) throw DomainError("strings need at least two bases");

  std::vector<EnsembleRecord> records;
  records.reserve(params.n_strings);
  for (std::size_t i = 0; i < params.n_strings; ++i) {
    EnsembleRecord rec;
    rec.index = i;
    rec.seed = substream_seed(params.master_seed, i);
    rec.sequence = random_sequence(rec.seed, params.length);
    const auto h = shannon_entropy(rec.sequence);
    rec.shannon_nats = h.nats;
    rec.shannon_bits = h.bits;

    ChainSpec spec;
    spec.sequence = rec.sequence;
    spec.spacing_m = params.spacing_m;
    spec.epsilon = params.epsilon;
    spec.direction = params.direction;
    spec.boundary = Boundary::Open;
    spec.temperature_k = params.temperature_k;
    try {
      const auto report = analyze_chain(spec);
      rec.mean_entropy = report.mean_entropy();
      rec.min_frequency = report.spectrum.frequencies.front();
    } catch (const InstabilityError& e) {
      rec.error = e.what();
    }
    records.push_back(std::move(rec));
  }
  return records;
}

double neighbor_entropy(BaseKind left, BaseKind right, const NeighborParams& params) {
  // The chain is mirror-symmetric about site 9, so evaluate the unordered
  // pair in one fixed orientation; (L, R) and (R, L) then agree bitwise.
  if (static_cast<int>(left) > static_cast<int>(right)) std::swap(left, right);

  ChainSpec spec;
  spec.sequence.assign(kNeighborChainLength, BaseKind::Adenine);
  spec.sequence[kNeighborSite - 1] = left;
  spec.sequence[kNeighborSite + 1] = right;
  spec.spacing_m = params.spacing_m;
  spec.epsilon = params.epsilon;
  spec.direction = params.direction;
  spec.boundary = Boundary::Open;
  spec.temperature_k = 0.0;

  const auto spectrum = numeric_modes(build_coupling_matrix(spec));
  const auto moments = thermal_moments(spectrum, 0.0);
  return single_site_entropy(moments, kNeighborSite).entropy;
}

NeighborTable neighbor_table(const NeighborParams& params) {
  NeighborTable table{};
  for (std::size_t row = 0; row < 4; ++row)
    for (std::size_t col = 0; col < 4; ++col)
      table[row][col] = neighbor_entropy(kAllBases[col], kAllBases[row], params);
  return table;
}

}  // namespace dipolechain
