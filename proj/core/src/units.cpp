#include "siteaddr/units.hpp"

#include <cmath>

#include "siteaddr/constants.hpp"
#include "siteaddr/errors.hpp"

namespace siteaddr {

double UnitSystem::k() const { return 2.0 * pi / lattice_wavelength; }

double UnitSystem::recoil_frequency() const { return recoil_energy / hbar; }

double UnitSystem::energy_to_recoil(double joule) const { return joule / recoil_energy; }
double UnitSystem::energy_from_recoil(double er) const { return er * recoil_energy; }

double UnitSystem::angular_frequency_to_recoil(double rad_per_s) const {
  return rad_per_s / recoil_frequency();
}
double UnitSystem::angular_frequency_from_recoil(double er_per_hbar) const {
  return er_per_hbar * recoil_frequency();
}

double UnitSystem::length_to_lattice(double meter) const { return meter / lattice_wavelength; }
double UnitSystem::length_from_lattice(double lambda_units) const {
  return lambda_units * lattice_wavelength;
}

UnitSystem make_units(double lattice_wavelength_m, double atom_mass_kg) {
  if (!(lattice_wavelength_m > 0.0))
    throw domain_error("make_units: lattice wavelength must be > 0");
  if (!(atom_mass_kg > 0.0))
    throw domain_error("make_units: atom mass must be > 0");

  UnitSystem u;
  u.lattice_wavelength = lattice_wavelength_m;
  u.atom_mass = atom_mass_kg;
  u.hbar = planck_reduced;
  u.c = speed_of_light;
  const double k = 2.0 * pi / lattice_wavelength_m;
  u.recoil_energy = planck_reduced * planck_reduced * k * k / (2.0 * atom_mass_kg);
  u.length_scale = std::sqrt(planck_reduced * planck_reduced / (atom_mass_kg * u.recoil_energy));
  return u;
}

}  // namespace siteaddr
