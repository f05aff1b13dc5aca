#pragma once

// The U-shaped path in the complex x plane: a vertical arm at Re x = -eps
// coming down from +i*inf, a half circle of radius eps below the origin, and
// a vertical arm at Re x = +eps going back up. Unit speed in the real path
// parameter s. The argument theta of x(s) is tracked continuously from the
// left arm (theta in (pi/2, pi]) through the circle ([pi, 2pi]) to the right
// arm ([2pi, 5pi/2)), so powers and logs of x stay on one analytic branch.

#include <cmath>
#include <complex>
#include <numbers>

#include "ucoulomb/errors.hpp"

namespace ucoulomb {

struct ContourPoint {
  double s = 0.0;
  cplx x{};
  cplx dxds{};   // unit tangent
  double theta = 0.0;  // continuous argument of x, in (pi/2, 5pi/2)
};

inline ContourPoint contour_point(double eps, double s) {
  constexpr double pi = std::numbers::pi;
  if (!(eps > 0.0)) throw non_positive_epsilon("contour: eps must be positive");
  double half = 0.5 * pi * eps;
  ContourPoint p;
  p.s = s;
  if (s < -half) {
    double h = -(s + half);  // height above the real axis
    p.x = cplx(-eps, h);
    p.dxds = cplx(0.0, -1.0);
    p.theta = std::atan2(h, -eps);
  } else if (s > half) {
    double v = s - half;
    p.x = cplx(eps, v);
    p.dxds = cplx(0.0, 1.0);
    p.theta = 2.0 * pi + std::atan2(v, eps);
  } else {
    // eps e^{i(s/eps + 3pi/2)} written as eps (sin t - i cos t) so that the
    // PT symmetry x(-s) = -conj(x(s)) holds bit-exactly
    double t = s / eps;
    p.x = eps * cplx(std::sin(t), -std::cos(t));
    p.dxds = cplx(std::cos(t), std::sin(t));
    p.theta = t + 1.5 * pi;
  }
  return p;
}

/// d^2 x / ds^2 along the path (zero on the arms, -x/eps^2 on the circle).
inline cplx contour_curvature(double eps, const ContourPoint& p) {
  constexpr double pi = std::numbers::pi;
  if (std::abs(p.s) <= 0.5 * pi * eps) return -p.x / (eps * eps);
  return cplx(0.0, 0.0);
}

/// log x with the continuously tracked argument; exp(contour_log(p)) == p.x.
inline cplx contour_log(const ContourPoint& p) {
  return cplx(std::log(std::abs(p.x)), p.theta);
}

/// x^a on the continuous branch. On the right arm this equals the principal
/// power times exp(2 pi i a).
inline cplx branch_power(const ContourPoint& p, cplx a) {
  return std::exp(a * contour_log(p));
}

}  // namespace ucoulomb
