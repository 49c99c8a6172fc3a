#include "siteaddr/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

#include "siteaddr/errors.hpp"

namespace siteaddr {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule, nodes on [-1, 1].
constexpr double xk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double wk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
// Gauss weights attach to the odd-index Kronrod nodes.
constexpr double wg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Panel {
  double a, b;
  double value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double kron = 0.0, gauss = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double fx = (i == 7) ? f(mid)
                               : f(mid - half * xk[i]) + f(mid + half * xk[i]);
    kron += wk[i] * fx;
    if (i % 2 == 1) gauss += wg[i / 2] * fx;
  }
  kron *= half;
  gauss *= half;
  const double diff = std::abs(kron - gauss);
  // standard QUADPACK-style sharpened estimate
  const double err = diff * std::min(1.0, std::pow(200.0 * diff / std::max(std::abs(kron), 1e-300), 1.5));
  return Panel{a, b, kron, std::max(err, std::abs(kron) * 1e-16)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double rel_tol,
                                    double abs_floor, int max_panels) {
  if (!(rel_tol > 0.0))
    throw domain_error("integrate_adaptive: rel_tol must be > 0");
  if (a == b) return QuadratureResult{0.0, 0.0, 0};

  std::priority_queue<Panel> panels;
  panels.push(evaluate_panel(f, a, b));
  double total = panels.top().value;
  double total_err = panels.top().error;

  int n = 1;
  while (total_err > std::max(rel_tol * std::abs(total), abs_floor)) {
    if (n >= max_panels)
      throw numeric_error("integrate_adaptive: panel budget exhausted", total_err);
    const Panel worst = panels.top();
    panels.pop();
    total -= worst.value;
    total_err -= worst.error;
    const double mid = 0.5 * (worst.a + worst.b);
    for (const Panel& p : {evaluate_panel(f, worst.a, mid), evaluate_panel(f, mid, worst.b)}) {
      total += p.value;
      total_err += p.error;
      panels.push(p);
    }
    ++n;
  }
  return QuadratureResult{total, total_err, n};
}

}  // namespace siteaddr
