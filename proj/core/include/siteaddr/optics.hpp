#ifndef SITEADDR_OPTICS_HPP
#define SITEADDR_OPTICS_HPP

#include <iosfwd>
#include <vector>

namespace siteaddr {

// Lens and input-beam parameters of the focused addressing laser. SI lengths;
// this is construction-time input, everything downstream works in lattice
// units.
struct BeamGeometry {
  double aperture;      // lens diameter D, m
  double focal_length;  // f, m
  double input_waist;   // waist w of the large input Gaussian, m
  double wavelength;    // lambda_f, m
  double power;         // P_f, W (0 when only relative profiles are needed)

  double k_f() const;  // 2 pi / lambda_f

  // Throws domain_error unless all lengths are positive.
  void validate() const;
};

// Relative focal intensity I(r)/I(0) of the Gaussian-apodized aperture,
//
//   I(r)/I(0) = (1/G^2) (int_0^{D/2} r' J0(k_f r' r / sqrt(r^2 + f^2))
//                        exp(-r'^2/w^2) dr')^2 ,
//   G = int_0^{D/2} r' exp(-r'^2/w^2) dr' ,
//
// evaluated with the full sqrt(r^2 + f^2) geometry (no paraxial shortcut).
// Numerator and G use the same adaptive panels, so the ratio is exactly 1 at
// r = 0. rel. error of the returned ratio <= tol, tol in (0, 1e-4].
double airy_relative_intensity(const BeamGeometry& geom, double r, double tol);

// Radially sampled relative profile on a uniform grid.
struct IntensityProfile {
  BeamGeometry geometry;
  std::vector<double> radius;  // m, strictly increasing, radius[0] == 0
  std::vector<double> i_rel;   // I(r)/I(0)
  double quadrature_tolerance;

  // Catmull-Rom interpolation between samples (exact at nodes).
  double interpolate(double r) const;
  double r_max() const { return radius.back(); }
};

// Uniform grid of n >= 2 points on [0, r_max]. Grid points are evaluated
// independently (optionally in parallel); results do not depend on ordering.
IntensityProfile intensity_map(const BeamGeometry& geom, double r_max, int n,
                               double tol, int threads = 1);

// Index of the first interior local minimum of the sampled profile.
// Throws domain_error when the samples never turn back up.
int first_minimum_index(const IntensityProfile& profile);

struct WaistFit {
  double waist;          // effective Gaussian waist w-bar, m
  double rms_residual;   // RMS of I_rel - exp(-2 r^2/w^2) over the fit window
  double fit_window;     // first-minimum radius, m
};

// Least-squares fit of exp(-2 r^2 / w^2) to the central lobe, uniform
// weights, window [0, first minimum].
WaistFit effective_gaussian_waist(const IntensityProfile& profile);

// Peak intensity I(0) for a given beam power: P / (2 pi int I_rel r dr),
// integrated over [0, r_cut]. The tail beyond a few Airy rings is negligible.
double peak_intensity(const BeamGeometry& geom, double power, double r_cut,
                      double tol);

// CSV export, header "r_over_lambda,I_rel", 13 significant digits.
void export_profile_csv(const IntensityProfile& profile, double lattice_wavelength,
                        std::ostream& out);

}  // namespace siteaddr

#endif
