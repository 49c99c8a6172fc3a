#ifndef SITEADDR_UNITS_HPP
#define SITEADDR_UNITS_HPP

namespace siteaddr {

// Recoil-energy unit system for a given lattice wavelength and atomic mass.
//
// All library interfaces exchange energies in units of E_r, frequencies in
// units of E_r/hbar and lengths in units of lambda; conversion to SI happens
// at the CLI boundary through this struct.
struct UnitSystem {
  double lattice_wavelength;  // lambda, m
  double atom_mass;           // kg
  double recoil_energy;       // E_r = hbar^2 k^2 / 2m, J
  double length_scale;        // a0 = sqrt(hbar^2 / (m E_r)), m
  double hbar;                // J s
  double c;                   // m/s

  double k() const;  // lattice wavevector 2 pi / lambda, 1/m

  // E_r / hbar, rad/s. The natural angular-frequency unit.
  double recoil_frequency() const;

  // SI <-> recoil conversions (exact inverses of each other).
  double energy_to_recoil(double joule) const;
  double energy_from_recoil(double er) const;
  double angular_frequency_to_recoil(double rad_per_s) const;
  double angular_frequency_from_recoil(double er_per_hbar) const;
  double length_to_lattice(double meter) const;
  double length_from_lattice(double lambda_units) const;
};

// Builds the unit system. Throws domain_error for non-positive inputs.
UnitSystem make_units(double lattice_wavelength_m, double atom_mass_kg);

}  // namespace siteaddr

#endif
