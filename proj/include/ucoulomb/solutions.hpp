#pragma once

// The two exact solutions on the contour,
//   psi1 = C1 e^{-kx} x^{L+1} 1F1(1+L+iZ/(2k), 2L+2, 2kx)
//   psi2 = C2 e^{-kx} x^{-L}  1F1(-L +iZ/(2k), -2L,  2kx)
// with x-powers on the continuous branch, their s-derivatives, and the
// Wronskian in the x variable as a linear-independence diagnostic.

#include <complex>

#include "ucoulomb/contour.hpp"
#include "ucoulomb/model.hpp"
#include "ucoulomb/specfun.hpp"

namespace ucoulomb {

struct SolutionPair {
  cplx psi1{}, psi2{};
  cplx dpsi1_ds{}, dpsi2_ds{};
};

namespace detail {

// value and x-derivative of C e^{-kx} x^pow 1F1(a, b, 2kx)
inline void coulomb_solution(cplx C, cplx a, cplx b, cplx pow, cplx k,
                             const ContourPoint& p, cplx& val, cplx& dval_dx) {
  cplx z = 2.0 * k * p.x;
  cplx f = hyp1f1(a, b, z).value;
  cplx fprime = (a / b) * hyp1f1(a + 1.0, b + 1.0, z).value;
  cplx xp = branch_power(p, pow);
  cplx ekx = std::exp(-k * p.x);
  val = C * ekx * xp * f;
  // product rule: (-k) f + (pow/x) f + 2k f'
  dval_dx = C * ekx * xp * (-k * f + pow / p.x * f + 2.0 * k * fprime);
}

}  // namespace detail

inline SolutionPair solution_pair(const PhysParams& params, cplx k,
                                  const ContourPoint& p, cplx C1 = 1.0,
                                  cplx C2 = 1.0) {
  validate(params);
  if (k == cplx(0.0)) throw zero_wavenumber();
  cplx iZ2k = cplx(0.0, params.Z) / (2.0 * k);
  double L = params.L;
  SolutionPair sp;
  cplx d1, d2;
  detail::coulomb_solution(C1, 1.0 + L + iZ2k, 2.0 * L + 2.0, cplx(L + 1.0), k,
                           p, sp.psi1, d1);
  detail::coulomb_solution(C2, -L + iZ2k, -2.0 * L, cplx(-L), k, p, sp.psi2,
                           d2);
  sp.dpsi1_ds = p.dxds * d1;
  sp.dpsi2_ds = p.dxds * d2;
  return sp;
}

inline cplx psi1(const PhysParams& params, cplx k, const ContourPoint& p,
                 cplx C1 = 1.0) {
  return solution_pair(params, k, p, C1, 1.0).psi1;
}

inline cplx psi2(const PhysParams& params, cplx k, const ContourPoint& p,
                 cplx C2 = 1.0) {
  return solution_pair(params, k, p, 1.0, C2).psi2;
}

/// Wronskian in x: psi1 dpsi2/dx - dpsi1/dx psi2; constant along the contour
/// and nonzero iff the pair is linearly independent (2L not an integer).
inline cplx wronskian(const PhysParams& params, cplx k, const ContourPoint& p,
                      cplx C1 = 1.0, cplx C2 = 1.0) {
  SolutionPair sp = solution_pair(params, k, p, C1, C2);
  return (sp.psi1 * sp.dpsi2_ds - sp.dpsi1_ds * sp.psi2) / p.dxds;
}

}  // namespace ucoulomb
