#include "siteaddr/optics.hpp"

#include <cmath>
#include <ostream>

#include "siteaddr/constants.hpp"
#include "siteaddr/csv.hpp"
#include "siteaddr/errors.hpp"
#include "siteaddr/interp.hpp"
#include "siteaddr/optimize.hpp"
#include "siteaddr/parallel.hpp"
#include "siteaddr/quadrature.hpp"
#include "siteaddr/special.hpp"

namespace siteaddr {

double BeamGeometry::k_f() const { return 2.0 * pi / wavelength; }

void BeamGeometry::validate() const {
  if (!(aperture > 0.0 && focal_length > 0.0 && input_waist > 0.0 && wavelength > 0.0))
    throw domain_error("BeamGeometry: all lengths must be > 0");
  if (power < 0.0) throw domain_error("BeamGeometry: power must be >= 0");
}

namespace {

// Aperture integral in units of the aperture radius R = D/2:
//   int_0^1 u J0(beta u) exp(-(u R / w)^2) du,
// beta = k_f R r / sqrt(r^2 + f^2). The common R^2 factor cancels in the
// intensity ratio.
double aperture_integral(const BeamGeometry& geom, double beta, double rel_tol) {
  const double rw = geom.aperture / 2.0 / geom.input_waist;
  const auto integrand = [beta, rw](double u) {
    return u * bessel_j0(beta * u) * std::exp(-(u * rw) * (u * rw));
  };
  return integrate_adaptive(integrand, 0.0, 1.0, rel_tol).value;
}

double bessel_argument(const BeamGeometry& geom, double r) {
  return geom.k_f() * (geom.aperture / 2.0) * r /
         std::sqrt(r * r + geom.focal_length * geom.focal_length);
}

}  // namespace

double airy_relative_intensity(const BeamGeometry& geom, double r, double tol) {
  geom.validate();
  if (r < 0.0) throw domain_error("airy_relative_intensity: r must be >= 0");
  if (!(tol > 0.0 && tol <= 1e-4))
    throw domain_error("airy_relative_intensity: tol must be in (0, 1e-4]");

  // Each integral at tol/4: the squared ratio then stays within tol.
  const double qtol = tol / 4.0;
  const double num = aperture_integral(geom, bessel_argument(geom, r), qtol);
  const double g = aperture_integral(geom, 0.0, qtol);
  const double ratio = num / g;
  return ratio * ratio;
}

IntensityProfile intensity_map(const BeamGeometry& geom, double r_max, int n,
                               double tol, int threads) {
  geom.validate();
  if (n < 2) throw domain_error("intensity_map: need n >= 2 grid points");
  if (!(r_max > 0.0)) throw domain_error("intensity_map: r_max must be > 0");

  IntensityProfile profile;
  profile.geometry = geom;
  profile.quadrature_tolerance = tol;
  profile.radius.resize(n);
  profile.i_rel.resize(n);
  for (int i = 0; i < n; ++i)
    profile.radius[i] = r_max * static_cast<double>(i) / (n - 1);
  parallel_for_indexed(n, threads, [&](int i) {
    profile.i_rel[i] = airy_relative_intensity(geom, profile.radius[i], tol);
  });
  return profile;
}

double IntensityProfile::interpolate(double r) const {
  return detail::catmull_rom_uniform(i_rel, radius[1] - radius[0], r);
}

int first_minimum_index(const IntensityProfile& profile) {
  const int n = static_cast<int>(profile.i_rel.size());
  for (int i = 1; i + 1 < n; ++i) {
    if (profile.i_rel[i] <= profile.i_rel[i - 1] && profile.i_rel[i] < profile.i_rel[i + 1])
      return i;
  }
  throw domain_error("first_minimum_index: no interior minimum in sampled range");
}

WaistFit effective_gaussian_waist(const IntensityProfile& profile) {
  const int imin = first_minimum_index(profile);
  const double r_min = profile.radius[imin];

  const auto sse = [&](double waist) {
    double s = 0.0;
    for (int i = 0; i <= imin; ++i) {
      const double r = profile.radius[i];
      const double d = std::exp(-2.0 * r * r / (waist * waist)) - profile.i_rel[i];
      s += d * d;
    }
    return s;
  };
  const MinimizeResult fit =
      golden_section_min(sse, r_min / 40.0, 4.0 * r_min, r_min * 1e-9);
  return WaistFit{fit.x, std::sqrt(fit.value / (imin + 1)), r_min};
}

double peak_intensity(const BeamGeometry& geom, double power, double r_cut,
                      double tol) {
  if (!(power > 0.0)) throw domain_error("peak_intensity: power must be > 0");
  const auto integrand = [&](double r) {
    return airy_relative_intensity(geom, r, tol) * r;
  };
  const double area = 2.0 * pi * integrate_adaptive(integrand, 0.0, r_cut, 1e-6).value;
  return power / area;
}

void export_profile_csv(const IntensityProfile& profile, double lattice_wavelength,
                        std::ostream& out) {
  out << "r_over_lambda,I_rel\n";
  for (std::size_t i = 0; i < profile.radius.size(); ++i)
    write_csv_row(out, {profile.radius[i] / lattice_wavelength, profile.i_rel[i]});
}

}  // namespace siteaddr
