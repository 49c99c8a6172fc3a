#ifndef SITEADDR_QUADRATURE_HPP
#define SITEADDR_QUADRATURE_HPP

#include <functional>

namespace siteaddr {

struct QuadratureResult {
  double value;
  double error_estimate;  // absolute
  int panels;             // panels in the final subdivision
};

// Adaptive Gauss(7)-Kronrod(15) panel subdivision on [a, b].
//
// Splits the panel with the largest error estimate until the summed estimate
// meets rel_tol * |integral| (or abs_floor for integrals near zero). Throws
// numeric_error carrying the achieved estimate if the panel budget runs out.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double rel_tol,
                                    double abs_floor = 1e-300,
                                    int max_panels = 2000);

}  // namespace siteaddr

#endif
