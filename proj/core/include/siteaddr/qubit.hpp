#ifndef SITEADDR_QUBIT_HPP
#define SITEADDR_QUBIT_HPP

#include <complex>

namespace siteaddr {

using cplx = std::complex<double>;

// Pure two-level state (c0, c1). Normalized to 1e-10 at construction; global
// phase is retained internally but never observable through population,
// relative phase or Bloch components.
class QubitState {
 public:
  QubitState(cplx c0, cplx c1);

  cplx c0() const { return c0_; }
  cplx c1() const { return c1_; }

  double p0() const { return std::norm(c0_); }
  double p1() const { return std::norm(c1_); }

  // Relative phase theta = arg(c1) - arg(c0), in (-pi, pi].
  // Undefined at the poles; returns 0 when either amplitude vanishes.
  double relative_phase() const;

  double norm() const;

  // Renormalizes after long integrations; no-op for unit-norm states.
  QubitState normalized() const;

 private:
  cplx c0_, c1_;
};

struct BlochVector {
  double sx, sy, sz;
};

// Spin mapping: Sz = |c1|^2 - |c0|^2, Sx = 2 cos(theta)|c1 c0|,
// Sy = 2 sin(theta)|c1 c0|.
BlochVector bloch(const QubitState& state);

// Inverse of bloch() up to global phase (c0 chosen real non-negative).
// Throws domain_error if the vector is not on the unit sphere within 1e-6.
QubitState qubit_from_bloch(const BlochVector& v);

}  // namespace siteaddr

#endif
