#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dipolechain {

/// A physical parameter is outside the domain of the model (negative
/// polarizability, non-positive spacing, index out of range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed sequence input. Position is 1-based over the raw text.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position, char offending)
      : std::invalid_argument(what), position_(position), offending_(offending) {}

  std::size_t position() const noexcept { return position_; }
  char offending() const noexcept { return offending_; }

 private:
  std::size_t position_;
  char offending_;
};

/// The coupling matrix has a non-positive eigenvalue: the harmonic chain
/// is unstable at this spacing and no physical mode spectrum exists.
class InstabilityError : public std::runtime_error {
 public:
  InstabilityError(const std::string& what, double squared_frequency, std::size_t mode_index)
      : std::runtime_error(what), squared_frequency_(squared_frequency), mode_index_(mode_index) {}

  /// Offending eigenvalue, in units of 1e30 s^-2.
  double squared_frequency() const noexcept { return squared_frequency_; }
  std::size_t mode_index() const noexcept { return mode_index_; }

 private:
  double squared_frequency_;
  std::size_t mode_index_;
};

}  // namespace dipolechain
