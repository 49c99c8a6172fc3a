#ifndef SITEADDR_OPTIMIZE_HPP
#define SITEADDR_OPTIMIZE_HPP

#include <functional>

namespace siteaddr {

struct MinimizeResult {
  double x;
  double value;
  int evaluations;
};

// Golden-section minimization on [a, b] to absolute x-tolerance xtol.
MinimizeResult golden_section_min(const std::function<double(double)>& f,
                                  double a, double b, double xtol);

// Coarse-grid scan followed by golden-section refinement around the best
// cell. Returns the maximizer. Throws domain_error when the coarse argmax
// lands on the range boundary (no interior maximum).
MinimizeResult grid_golden_max(const std::function<double(double)>& f,
                               double a, double b, int coarse_points,
                               double xtol);

}  // namespace siteaddr

#endif
