#include <doctest.h>

#include <cmath>
#include <random>

#include "siteaddr/constants.hpp"
#include "siteaddr/errors.hpp"
#include "siteaddr/units.hpp"

using namespace siteaddr;

TEST_CASE("recoil energy for the reference lattice") {
  const UnitSystem u = make_units(850e-9, rb87_mass);
  // E_r/hbar = 2 pi x 3.18 kHz within 1%
  const double f_khz = u.recoil_frequency() / (2.0 * pi) / 1e3;
  CHECK(f_khz == doctest::Approx(3.18).epsilon(0.01));
  CHECK(u.length_scale > 0.0);
  // a0 = sqrt(2)/k for this unit system
  CHECK(u.length_scale == doctest::Approx(std::sqrt(2.0) / u.k()).epsilon(1e-12));
}

TEST_CASE("recoil energy scalings") {
  const UnitSystem base = make_units(850e-9, rb87_mass);
  const UnitSystem heavy = make_units(850e-9, 4.0 * rb87_mass);
  CHECK(heavy.recoil_energy == doctest::Approx(base.recoil_energy / 4.0).epsilon(1e-14));
  const UnitSystem blue = make_units(425e-9, rb87_mass);
  CHECK(blue.recoil_energy == doctest::Approx(4.0 * base.recoil_energy).epsilon(1e-14));
}

TEST_CASE("unit conversions are exact inverses") {
  const UnitSystem u = make_units(850e-9, rb87_mass);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> mag(-12.0, 12.0);
  for (int i = 0; i < 200; ++i) {
    const double x = std::pow(10.0, mag(rng));
    CHECK(u.energy_from_recoil(u.energy_to_recoil(x)) == doctest::Approx(x).epsilon(1e-12));
    CHECK(u.length_from_lattice(u.length_to_lattice(x)) == doctest::Approx(x).epsilon(1e-12));
    CHECK(u.angular_frequency_from_recoil(u.angular_frequency_to_recoil(x)) ==
          doctest::Approx(x).epsilon(1e-12));
  }
}

TEST_CASE("make_units rejects non-positive input") {
  CHECK_THROWS_AS(make_units(0.0, rb87_mass), domain_error);
  CHECK_THROWS_AS(make_units(850e-9, -1.0), domain_error);
}
