#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "dipolechain/units.hpp"

namespace dipolechain {

enum class BaseKind { Adenine, Cytosine, Guanine, Thymine };

inline constexpr std::array<BaseKind, 4> kAllBases = {BaseKind::Adenine, BaseKind::Cytosine,
                                                      BaseKind::Guanine, BaseKind::Thymine};

/// Cartesian displacement direction; the chain axis is z.
enum class Direction { X, Y, Z };

enum class Boundary { Open, Periodic };

/// Static polarizability of a base along a direction, in au.
double polarizability(BaseKind base, Direction direction);

/// Dipole-dipole sign factor: +1 transverse to the chain, -2 along it.
constexpr double coupling_sign(Direction d) noexcept { return d == Direction::Z ? -2.0 : 1.0; }

char base_letter(BaseKind base) noexcept;
std::string_view base_name(BaseKind base) noexcept;
char direction_letter(Direction d) noexcept;
std::string_view boundary_name(Boundary b) noexcept;

/// Case-insensitive; throws DomainError on anything else.
Direction parse_direction(std::string_view text);
Boundary parse_boundary(std::string_view text);

/// Parses a plain base string or single-record FASTA text. Header lines
/// ('>' first) and whitespace are skipped; A/C/G/T in either case.
/// Throws ParseError naming the 1-based position of a bad character, or
/// when a second FASTA record starts.
std::vector<BaseKind> parse_sequence(std::string_view text);

/// Reads a file and runs parse_sequence over it.
std::vector<BaseKind> read_sequence_file(const std::string& path);

std::string sequence_string(std::span<const BaseKind> sequence);

/// One chain experiment.
struct ChainSpec {
  std::vector<BaseKind> sequence;
  double spacing_m = 4.5 * constants::angstrom;
  double epsilon = 1.0;
  Direction direction = Direction::X;
  Boundary boundary = Boundary::Open;
  double temperature_k = 300.0;
  int n_electrons = 1;

  /// Throws DomainError when N < 2 (N < 3 periodic), r <= 0, epsilon <= 0,
  /// T < 0 or n_electrons < 1.
  void validate() const;
  std::size_t size() const noexcept { return sequence.size(); }
};

/// Symmetric nearest-neighbour coupling matrix in units of 1e30 s^-2:
/// diagonal Omega_j^2, off-diagonal c_d K_eff (plus corners when periodic).
struct CouplingMatrix {
  Eigen::MatrixXd values;

  std::size_t size() const noexcept { return static_cast<std::size_t>(values.rows()); }
};

/// Per-site trapping frequencies of the spec's sequence along its direction.
std::vector<Frequency> trap_frequencies(const ChainSpec& spec);

/// Chain with arbitrary per-site traps and a shared coupling k_eff (1e30 s^-2).
CouplingMatrix build_coupling_matrix(std::span<const Frequency> traps, double k_eff,
                                     Direction direction, Boundary boundary);

CouplingMatrix build_coupling_matrix(const ChainSpec& spec);

/// Shannon-style helper used by experiments: counts of each base.
std::array<std::size_t, 4> base_counts(std::span<const BaseKind> sequence) noexcept;

}  // namespace dipolechain
