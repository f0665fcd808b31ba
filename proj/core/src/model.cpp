#include "dipolechain/model.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "dipolechain/errors.hpp"

namespace dipolechain {

namespace {

// Static polarizabilities (au) along x, y, z.
constexpr std::array<std::array<double, 3>, 4> kPolarizability = {{
    {102.5, 114.0, 49.6},  // adenine
    {78.8, 107.1, 44.2},   // cytosine
    {108.7, 124.8, 51.2},  // guanine
    {80.7, 101.7, 45.9},   // thymine
}};

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

double polarizability(BaseKind base, Direction direction) {
  return kPolarizability[static_cast<std::size_t>(base)][static_cast<std::size_t>(direction)];
}

char base_letter(BaseKind base) noexcept { return "ACGT"[static_cast<std::size_t>(base)]; }

std::string_view base_name(BaseKind base) noexcept {
  constexpr std::array<std::string_view, 4> names = {"Adenine", "Cytosine", "Guanine",
                                                     "Thymine"};
  return names[static_cast<std::size_t>(base)];
}

char direction_letter(Direction d) noexcept { return "xyz"[static_cast<std::size_t>(d)]; }

std::string_view boundary_name(Boundary b) noexcept {
  return b == Boundary::Open ? "open" : "periodic";
}

Direction parse_direction(std::string_view text) {
  const auto t = lower(text);
  if (t == "x") return Direction::X;
  if (t == "y") return Direction::Y;
  if (t == "z") return Direction::Z;
  throw DomainError("direction must be x, y or z, got '" + std::string(text) + "'");
}

Boundary parse_boundary(std::string_view text) {
  const auto t = lower(text);
  if (t == "open") return Boundary::Open;
  if (t == "periodic") return Boundary::Periodic;
  throw DomainError("boundary must be open or periodic, got '" + std::string(text) + "'");
}

std::vector<BaseKind> parse_sequence(std::string_view text) {
  std::vector<BaseKind> out;
  out.reserve(text.size());
  bool at_line_start = true;
  bool in_header = false;
  int records = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '\n') {
      at_line_start = true;
      in_header = false;
      continue;
    }
    if (in_header) continue;
    if (at_line_start && c == '>') {
      if (++records > 1 || (records == 1 && !out.empty()))
        throw ParseError("multiple FASTA records at position " + std::to_string(i + 1) +
                             "; only single-record input is supported",
                         i + 1, c);
      in_header = true;
      continue;
    }
    at_line_start = false;
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    switch (std::toupper(static_cast<unsigned char>(c))) {
      case 'A': out.push_back(BaseKind::Adenine); break;
      case 'C': out.push_back(BaseKind::Cytosine); break;
      case 'G': out.push_back(BaseKind::Guanine); break;
      case 'T': out.push_back(BaseKind::Thymine); break;
      default:
        throw ParseError("invalid base '" + std::string(1, c) + "' at position " +
                             std::to_string(i + 1),
                         i + 1, c);
    }
  }
  return out;
}

std::vector<BaseKind> read_sequence_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open sequence file '" + path + "'", 0, '\0');
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sequence(buf.str());
}

std::string sequence_string(std::span<const BaseKind> sequence) {
  std::string s;
  s.reserve(sequence.size());
  for (auto b : sequence) s.push_back(base_letter(b));
  return s;
}

void ChainSpec::validate() const {
  const std::size_t min_sites = boundary == Boundary::Periodic ? 3 : 2;
  if (sequence.size() < min_sites)
    throw DomainError("chain needs at least " + std::to_string(min_sites) + " sites for " +
                      std::string(boundary_name(boundary)) + " boundary, got " +
                      std::to_string(sequence.size()));
  if (!(spacing_m > 0.0)) throw DomainError("spacing must be positive");
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
  if (!(temperature_k >= 0.0)) throw DomainError("temperature must be >= 0 K");
  if (n_electrons < 1) throw DomainError("electron count must be >= 1");
}

std::vector<Frequency> trap_frequencies(const ChainSpec& spec) {
  std::vector<Frequency> traps;
  traps.reserve(spec.size());
  for (auto b : spec.sequence)
    traps.push_back(trapping_frequency(polarizability(b, spec.direction), spec.n_electrons));
  return traps;
}

CouplingMatrix build_coupling_matrix(std::span<const Frequency> traps, double k_eff,
                                     Direction direction, Boundary boundary) {
  const auto n = static_cast<Eigen::Index>(traps.size());
  const Eigen::Index min_sites = boundary == Boundary::Periodic ? 3 : 2;
  if (n < min_sites) throw DomainError("chain too short for the requested boundary");
  if (!(k_eff >= 0.0)) throw DomainError("coupling must be non-negative");

  CouplingMatrix v{Eigen::MatrixXd::Zero(n, n)};
  const double off = coupling_sign(direction) * k_eff;
  for (Eigen::Index j = 0; j < n; ++j) v.values(j, j) = traps[static_cast<std::size_t>(j)].squared();
  for (Eigen::Index j = 0; j + 1 < n; ++j) {
    v.values(j, j + 1) = off;
    v.values(j + 1, j) = off;
  }
  if (boundary == Boundary::Periodic) {
    v.values(0, n - 1) = off;
    v.values(n - 1, 0) = off;
  }
  return v;
}

CouplingMatrix build_coupling_matrix(const ChainSpec& spec) {
  spec.validate();
  const auto traps = trap_frequencies(spec);
  const double k = coupling_constant(spec.spacing_m, spec.epsilon, spec.n_electrons);
  return build_coupling_matrix(traps, k, spec.direction, spec.boundary);
}

std::array<std::size_t, 4> base_counts(std::span<const BaseKind> sequence) noexcept {
  std::array<std::size_t, 4> counts{};
  for (auto b : sequence) ++counts[static_cast<std::size_t>(b)];
  return counts;
}

}  // namespace dipolechain
