#include "siteaddr/qubit.hpp"

#include <cmath>

#include "siteaddr/constants.hpp"
#include "siteaddr/errors.hpp"

namespace siteaddr {

namespace {
constexpr double norm_tolerance = 1e-10;
}

QubitState::QubitState(cplx c0, cplx c1) : c0_(c0), c1_(c1) {
  const double n = std::abs(std::norm(c0) + std::norm(c1) - 1.0);
  if (n > norm_tolerance)
    throw domain_error("QubitState: amplitudes not normalized (|deviation| = " +
                       std::to_string(n) + ")");
}

double QubitState::relative_phase() const {
  if (std::abs(c0_) == 0.0 || std::abs(c1_) == 0.0) return 0.0;
  double theta = std::arg(c1_) - std::arg(c0_);
  if (theta > pi) theta -= 2.0 * pi;
  if (theta <= -pi) theta += 2.0 * pi;
  return theta;
}

double QubitState::norm() const { return std::sqrt(std::norm(c0_) + std::norm(c1_)); }

QubitState QubitState::normalized() const {
  const double n = norm();
  QubitState s(*this);
  s.c0_ /= n;
  s.c1_ /= n;
  return s;
}

BlochVector bloch(const QubitState& state) {
  const double cross = 2.0 * std::abs(state.c1() * state.c0());
  const double theta = state.relative_phase();
  return BlochVector{cross * std::cos(theta), cross * std::sin(theta),
                     state.p1() - state.p0()};
}

QubitState qubit_from_bloch(const BlochVector& v) {
  const double r2 = v.sx * v.sx + v.sy * v.sy + v.sz * v.sz;
  if (std::abs(r2 - 1.0) > 1e-6)
    throw domain_error("qubit_from_bloch: vector not on the unit sphere");
  const double p1 = (1.0 + v.sz) / 2.0;
  const double p0 = (1.0 - v.sz) / 2.0;
  const double theta = std::atan2(v.sy, v.sx);
  return QubitState(cplx(std::sqrt(p0), 0.0),
                    std::polar(std::sqrt(p1), theta)).normalized();
}

}  // namespace siteaddr
