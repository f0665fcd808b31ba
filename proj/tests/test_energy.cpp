#include <doctest.h>

#include <cmath>

#include "dipolechain/energy.hpp"
#include "dipolechain/errors.hpp"
#include "dipolechain/gaussian.hpp"
#include "oracles.hpp"

using namespace dipolechain;
using doctest::Approx;

namespace {

double k_at(double r_a, double eps = 1.0) { return coupling_constant(r_a * constants::angstrom, eps); }

double exact_binding(double omega, std::size_t n, double k, Direction d, Boundary b) {
  const std::vector traps(n, Frequency::from_peta(omega));
  return binding_energy(numeric_modes(build_coupling_matrix(traps, k, d, b)), traps);
}

double middle_negativity(double omega, std::size_t n, double k, Direction d) {
  const std::vector traps(n, Frequency::from_peta(omega));
  const auto m = thermal_moments(numeric_modes(build_coupling_matrix(traps, k, d, Boundary::Periodic)), 0.0);
  return negativity(pair_criteria(m, n / 2 - 1, n / 2));
}

}  // namespace

TEST_CASE("binding energy of a decoupled chain vanishes") {
  CHECK(exact_binding(4.0, 6, 0.0, Direction::X, Boundary::Open) == 0.0);
  const std::vector traps{Frequency::from_peta(4.0), Frequency::from_peta(5.0)};
  const auto s = numeric_modes(build_coupling_matrix(traps, 0.0, Direction::X, Boundary::Open));
  CHECK(binding_energy(s, traps) == 0.0);
}

TEST_CASE("binding energy of the two-mode chain") {
  const double k = k_at(4.5);
  const oracle::TwoMode tm(4.0, k);
  const double expected = constants::reduced_planck * tm.binding_over_hbar(4.0) * kFrequencyUnit;
  const double got = exact_binding(4.0, 2, k, Direction::X, Boundary::Open);
  CHECK(got < 0.0);
  CHECK(oracle::rel(got, expected) < 1e-10);
}

TEST_CASE("length mismatch") {
  const std::vector traps(3, Frequency::from_peta(4.0));
  const auto s = numeric_modes(build_coupling_matrix(traps, 1.0, Direction::X, Boundary::Open));
  const std::vector two(2, Frequency::from_peta(4.0));
  CHECK_THROWS_AS(binding_energy(s, two), DomainError);
}

TEST_CASE("asymptotic witness") {
  const auto w = Frequency::from_peta(6.0);
  CHECK(asymptotic_witness(w, 0.0, Direction::Z) == 0.0);
  CHECK(asymptotic_witness(w, 1.8, Direction::Z) == Approx(-0.1).epsilon(1e-15));
  CHECK(asymptotic_witness(Frequency::from_peta(4.0), 1.6, Direction::X) == Approx(-0.1).epsilon(1e-15));
  CHECK(asymptotic_witness(Frequency::from_peta(4.0), 1.6, Direction::Y) == Approx(-0.1).epsilon(1e-15));
  CHECK(asymptotic_witness(w, k_at(10.0), Direction::Z) ==
        Approx(8.0 * asymptotic_witness(w, k_at(20.0), Direction::Z)).epsilon(1e-13));
  CHECK(asymptotic_binding_energy(50, w, 0.0) == 0.0);
  CHECK(asymptotic_binding_energy(8, w, 0.5) ==
        Approx(-8.0 * constants::reduced_planck * 6e15 * 0.25 / 8.0).epsilon(1e-15));
}

TEST_CASE("numeric S matches the large-distance law at 20 A") {
  const double k = k_at(20.0);
  for (auto [d, omega] : {std::pair{Direction::Z, 6.0}, std::pair{Direction::X, 4.0}}) {
    const std::vector traps(50, Frequency::from_peta(omega));
    const auto m = thermal_moments(numeric_modes(build_coupling_matrix(traps, k, d, Boundary::Periodic)), 300.0);
    const auto c = pair_criteria(m, 24, 25);
    const double numeric = d == Direction::Z ? c.s2 : c.s1;
    const double law = asymptotic_witness(Frequency::from_peta(omega), k, d);
    CHECK(std::abs(numeric - law) / std::abs(numeric) <= 0.01);
  }
}

TEST_CASE("exact vs asymptotic binding energy") {
  for (auto [d, omega] : {std::pair{Direction::Z, 6.0}, std::pair{Direction::X, 4.0}}) {
    const auto r20 = compare_binding_energy(50, Frequency::from_peta(omega), k_at(20.0), d);
    CHECK(r20.exact < 0.0);
    CHECK(r20.relative_gap <= 0.01);
    for (double r : {15.0, 20.0, 30.0}) {
      const auto near = compare_binding_energy(50, Frequency::from_peta(omega), k_at(r), d);
      const auto far = compare_binding_energy(50, Frequency::from_peta(omega), k_at(2 * r), d);
      CHECK(far.relative_gap / near.relative_gap <= 0.2);
    }
  }
}

TEST_CASE("binding energy and negativity are co-monotone in r") {
  for (auto [d, omega] : {std::pair{Direction::Z, 6.0}, std::pair{Direction::X, 4.0}}) {
    double prev_e = INFINITY, prev_n = INFINITY;
    for (double r = 4.5; r <= 10.0 + 1e-9; r += 0.25) {
      const double e = std::abs(exact_binding(omega, 50, k_at(r), d, Boundary::Periodic));
      const double n = middle_negativity(omega, 50, k_at(r), d);
      CHECK(e < prev_e);
      CHECK(n < prev_n);
      prev_e = e;
      prev_n = n;
    }
  }
}

TEST_CASE("scaled dispersion binds less") {
  for (double r : {4.5, 6.0, 8.0}) {
    const double strong = exact_binding(4.0, 30, k_at(r, 1.0), Direction::X, Boundary::Periodic);
    const double weak = exact_binding(4.0, 30, k_at(r, 0.01), Direction::X, Boundary::Periodic);
    CHECK(std::abs(weak) < std::abs(strong));
  }
}
