#pragma once

// Physical parameters, their validity rules, the complexified potential
// i Z / x + L(L+1)/x^2, and the energy/wavenumber dispersion in units
// hbar = 1, |2m| = 1, so that 2 m E / hbar^2 = -k^2 reads E = -sign(m) k^2.

#include <cmath>
#include <complex>

#include "ucoulomb/contour.hpp"
#include "ucoulomb/errors.hpp"

namespace ucoulomb {

struct PhysParams {
  double Z = 1.0;     // Coulomb strength
  double L = 0.25;    // angular-momentum-like parameter; 2L must not be integer
  double eps = 0.005; // contour width
};

inline void validate(const PhysParams& p) {
  if (!(p.eps > 0.0))
    throw non_positive_epsilon("params: eps must be positive");
  double twoL = 2.0 * p.L;
  if (std::abs(twoL - std::round(twoL)) <= 1e-9)
    throw integer_two_l("params: 2L must not be an integer");
}

inline cplx potential(const PhysParams& params, const ContourPoint& p) {
  cplx inv = 1.0 / p.x;
  return cplx(0.0, params.Z) * inv + params.L * (params.L + 1.0) * inv * inv;
}

enum class MassSign : int { positive = +1, negative = -1 };

inline cplx energy_from_k(cplx k, MassSign mass_sign) {
  return -double(static_cast<int>(mass_sign)) * k * k;
}

}  // namespace ucoulomb
