#include "siteaddr/optimize.hpp"

#include <cmath>
#include <vector>

#include "siteaddr/errors.hpp"

namespace siteaddr {

MinimizeResult golden_section_min(const std::function<double(double)>& f,
                                  double a, double b, double xtol) {
  if (!(b > a)) throw domain_error("golden_section_min: empty bracket");
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  int evals = 2;
  while (b - a > xtol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
    ++evals;
    if (evals > 400) break;  // xtol below float resolution
  }
  const double x = 0.5 * (a + b);
  return MinimizeResult{x, f(x), evals + 1};
}

MinimizeResult grid_golden_max(const std::function<double(double)>& f,
                               double a, double b, int coarse_points,
                               double xtol) {
  if (coarse_points < 3) throw domain_error("grid_golden_max: need >= 3 grid points");
  std::vector<double> xs(coarse_points), fs(coarse_points);
  int best = 0;
  for (int i = 0; i < coarse_points; ++i) {
    xs[i] = a + (b - a) * i / (coarse_points - 1);
    fs[i] = f(xs[i]);
    if (fs[i] > fs[best]) best = i;
  }
  if (best == 0 || best == coarse_points - 1)
    throw domain_error("grid_golden_max: no interior maximum in range");
  auto neg = [&f](double x) { return -f(x); };
  MinimizeResult r = golden_section_min(neg, xs[best - 1], xs[best + 1], xtol);
  r.value = -r.value;
  r.evaluations += coarse_points;
  return r;
}

}  // namespace siteaddr
