#ifndef SITEADDR_INTERP_HPP
#define SITEADDR_INTERP_HPP

#include <algorithm>
#include <cmath>
#include <vector>

namespace siteaddr::detail {

// Catmull-Rom interpolation on a uniform grid starting at 0 with step h.
// Exact at the nodes; end segments clamp the outside neighbor. Arguments are
// mirrored around 0 (radial symmetry) and clamped at the far end.
inline double catmull_rom_uniform(const std::vector<double>& ys, double h, double x) {
  x = std::abs(x);
  const int n = static_cast<int>(ys.size());
  if (x >= (n - 1) * h) return ys[n - 1];
  const int i = std::min(n - 2, static_cast<int>(x / h));
  const double t = x / h - i;
  const double p1 = ys[i], p2 = ys[i + 1];
  const double p0 = (i == 0) ? ys[1] : ys[i - 1];
  const double p3 = (i + 2 < n) ? ys[i + 2] : ys[n - 1];
  const double b = p2 - p0;
  const double c = 2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3;
  const double d = -p0 + 3.0 * p1 - 3.0 * p2 + p3;
  return 0.5 * (2.0 * p1 + b * t + c * t * t + d * t * t * t);
}

}  // namespace siteaddr::detail

#endif
