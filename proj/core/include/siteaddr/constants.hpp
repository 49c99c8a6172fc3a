#ifndef SITEADDR_CONSTANTS_HPP
#define SITEADDR_CONSTANTS_HPP

namespace siteaddr {

// CODATA 2018
inline constexpr double speed_of_light = 299792458.0;           // m/s
inline constexpr double planck_reduced = 1.054571817e-34;       // J s
inline constexpr double atomic_mass_unit = 1.66053906660e-27;   // kg

// 87Rb atomic mass (Steck alkali data)
inline constexpr double rb87_mass = 86.909180527 * atomic_mass_unit;  // kg

inline constexpr double pi = 3.14159265358979323846;

}  // namespace siteaddr

#endif
