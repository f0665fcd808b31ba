#include <doctest.h>

#include <cmath>

#include "dipolechain/errors.hpp"
#include "dipolechain/units.hpp"

using namespace dipolechain;
using doctest::Approx;

TEST_CASE("constants are positive and the polarizability unit is 0.164e-40 F m^2") {
  using namespace constants;
  for (double c : {elementary_charge, electron_mass, vacuum_permittivity, reduced_planck, boltzmann,
                   atomic_polarizability_unit})
    CHECK(c > 0.0);
  CHECK(atomic_polarizability_unit == 0.164e-40);
}

TEST_CASE("trapping frequency from polarizability") {
  // Reference values: sqrt(e^2 / (m_e alpha)) evaluated independently with
  // the same CODATA constants.
  CHECK(trapping_frequency(102.5).peta() == Approx(4.09432241695261).epsilon(1e-12));
  CHECK(trapping_frequency(124.8).peta() == Approx(3.7105362538470805).epsilon(1e-12));
  CHECK(trapping_frequency(45.9).peta() == Approx(6.118396659290181).epsilon(1e-12));
  // Adenine x rounds to the tabulated 4.1.
  CHECK(std::abs(trapping_frequency(102.5).peta() - 4.1) < 0.05);

  SUBCASE("electron count enters as sqrt(n)") {
    CHECK(trapping_frequency(102.5, 4).peta() == Approx(2.0 * trapping_frequency(102.5).peta()));
  }
  SUBCASE("invalid input") {
    CHECK_THROWS_AS(trapping_frequency(0.0), DomainError);
    CHECK_THROWS_AS(trapping_frequency(-3.0), DomainError);
    CHECK_THROWS_AS(trapping_frequency(50.0, 0), DomainError);
  }
}

TEST_CASE("polarizability round trip") {
  for (double alpha : {10.0, 44.2, 102.5, 124.8, 900.0}) {
    for (int n : {1, 3}) {
      const double back = polarizability_from_frequency(trapping_frequency(alpha, n), n);
      CHECK(std::abs(back - alpha) / alpha < 1e-12);
    }
  }
}

TEST_CASE("coupling constant") {
  const double r = 4.5 * constants::angstrom;
  CHECK(std::sqrt(coupling_constant(r)) == Approx(1.6671237106823649).epsilon(1e-12));
  // Within 5% of the 1.6e15 anchor.
  CHECK(std::abs(std::sqrt(coupling_constant(r)) / 1.6 - 1.0) < 0.05);
  // eps enters under a square root: sqrt(K) scales as eps^(1/4).
  CHECK(std::sqrt(coupling_constant(r, 0.01)) ==
        Approx(std::pow(10.0, -0.5) * std::sqrt(coupling_constant(r))).epsilon(1e-13));
  CHECK(coupling_constant(2 * r) == Approx(coupling_constant(r) / 8.0).epsilon(1e-14));
  CHECK(coupling_constant(r, 1.0, 3) == Approx(3.0 * coupling_constant(r)).epsilon(1e-14));

  CHECK_THROWS_AS(coupling_constant(0.0), DomainError);
  CHECK_THROWS_AS(coupling_constant(-r), DomainError);
  CHECK_THROWS_AS(coupling_constant(r, 0.0), DomainError);

  CHECK(spacing_for_coupling(coupling_constant(r, 0.3), 0.3) == Approx(r).epsilon(1e-13));
}

TEST_CASE("thermal ratio") {
  const double r = 4.5 * constants::angstrom;
  const auto w1 = Frequency::from_squared(coupling_constant(r));
  const auto w001 = Frequency::from_squared(coupling_constant(r, 0.01));
  CHECK(thermal_ratio(300.0, w1) == Approx(0.047118401004669234).epsilon(1e-12));
  CHECK(thermal_ratio(300.0, w001) == Approx(0.1490014668799208).epsilon(1e-12));
  CHECK(thermal_ratio(0.0, w1) == 0.0);

  SUBCASE("linear in T, inverse in omega") {
    const auto w = Frequency::from_peta(3.0);
    CHECK(thermal_ratio(600.0, w) == Approx(2.0 * thermal_ratio(300.0, w)).epsilon(1e-15));
    CHECK(thermal_ratio(300.0, Frequency::from_peta(6.0)) ==
          Approx(0.5 * thermal_ratio(300.0, w)).epsilon(1e-15));
  }
  CHECK_THROWS_AS(thermal_ratio(300.0, Frequency::from_peta(0.0)), DomainError);
  CHECK_THROWS_AS(thermal_ratio(-1.0, w1), DomainError);
}

TEST_CASE("Frequency rejects negative values instead of producing NaN") {
  CHECK_THROWS_AS(Frequency::from_squared(-1e-3), DomainError);
  CHECK_THROWS_AS(Frequency::from_peta(-1.0), DomainError);
  CHECK_THROWS_AS(Frequency::from_peta(std::nan("")), DomainError);
  CHECK(Frequency::from_squared(16.0).peta() == 4.0);
  CHECK(Frequency::from_rad_per_s(2.5e15).peta() == Approx(2.5));
}
