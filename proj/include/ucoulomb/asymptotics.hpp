#pragma once

// Asymptotic decomposition of psi1, psi2 for s -> +-inf into Coulomb-modified
// plane waves
//   psi_j(s -> -inf) ~ a_{j-} e^{+i phi_-(s)} + b_{j-} e^{-i phi_-(s)},
//   psi_j(s -> +inf) ~ a_{j+} e^{+i phi_+(s)} + b_{j+} e^{-i phi_+(s)},
// with phi_-(s) = k s - Z/(2k) ln(-2ks), phi_+(s) = k s + Z/(2k) ln(2ks).
// The eight closed-form coefficients follow from the 2F0 expansion of 1F1
// with the continuous-branch powers of x on the right arm.

#include <complex>
#include <numbers>

#include "ucoulomb/errors.hpp"
#include "ucoulomb/model.hpp"
#include "ucoulomb/specfun.hpp"

namespace ucoulomb {

struct AsymptoticCoeffs {
  cplx a1p{}, a1m{}, b1p{}, b1m{};
  cplx a2p{}, a2m{}, b2p{}, b2m{};
  cplx C1{1.0}, C2{1.0};
};

inline AsymptoticCoeffs asymptotic_coeffs(const PhysParams& params, cplx k,
                                          cplx C1 = 1.0, cplx C2 = 1.0) {
  constexpr double pi = std::numbers::pi;
  validate(params);
  if (k == cplx(0.0)) throw zero_wavenumber();
  double L = params.L, Z = params.Z, eps = params.eps;
  cplx iZ2k = cplx(0.0, Z) / (2.0 * k);
  for (cplx g : {cplx(L + 1.0) + iZ2k, cplx(L + 1.0) - iZ2k, cplx(-L) + iZ2k,
                 cplx(-L) - iZ2k}) {
    if (detail::near_nonpositive_integer(g, 1e-12))
      throw at_bound_state_pole("asymptotic coefficients at a Gamma pole");
  }

  auto phase = [](double c) { return std::exp(cplx(0.0, pi * c)); };
  cplx u = std::exp(cplx(0.0, 1.0) * k * (pi * eps / 2.0));  // e^{+i k pi eps/2}
  cplx E = std::exp(k * eps);
  cplx zfac = std::exp(-pi * Z / (4.0 * k));
  // principal-branch powers of 2k
  cplx pw1 = std::exp(-(L + 1.0) * std::log(2.0 * k));
  cplx pw2 = std::exp(L * std::log(2.0 * k));
  cplx g1 = std::exp(clngamma(2.0 * L + 2.0));
  cplx g2 = std::exp(clngamma(-2.0 * L));
  cplx G1p = crgamma(cplx(L + 1.0) + iZ2k);  // 1/Gamma(L+1+iZ/2k)
  cplx G1m = crgamma(cplx(L + 1.0) - iZ2k);
  cplx G2p = crgamma(cplx(-L) + iZ2k);
  cplx G2m = crgamma(cplx(-L) - iZ2k);

  cplx P1 = C1 * pw1 * zfac * g1;
  cplx P2 = C2 * pw2 * zfac * g2;

  AsymptoticCoeffs c;
  c.C1 = C1;
  c.C2 = C2;
  c.a1p = P1 / u * phase(2.0 * L + 2.0) * E * G1p;
  c.a1m = P1 * u * phase(L + 1.0) * E * G1m;
  c.b1p = P1 * u * phase(3.0 * L + 3.0) / E * G1m;
  c.b1m = P1 / u / E * G1p;
  c.a2p = P2 / u * phase(-2.0 * L) * E * G2p;
  c.a2m = P2 * u * phase(-L) * E * G2m;
  c.b2p = P2 * u * phase(-3.0 * L) / E * G2m;
  c.b2m = P2 / u / E * G2p;
  return c;
}

enum class Side { left, right };

/// Coulomb log phase: phi(s) = k s -+ Z/(2k) ln(-+2ks) for the left/right arm.
inline cplx coulomb_phase(cplx k, double Z, double s, Side side) {
  if (side == Side::left) {
    if (!(s < 0.0)) throw wrong_side("left waveform needs s < 0");
    return k * s - Z / (2.0 * k) * std::log(-2.0 * k * s);
  }
  if (!(s > 0.0)) throw wrong_side("right waveform needs s > 0");
  return k * s + Z / (2.0 * k) * std::log(2.0 * k * s);
}

/// Leading asymptotic waveform a e^{+i phi} + b e^{-i phi}.
inline cplx asymptotic_wave(cplx k, double Z, cplx a, cplx b, double s,
                            Side side) {
  cplx iphi = cplx(0.0, 1.0) * coulomb_phase(k, Z, s, side);
  return a * std::exp(iphi) + b * std::exp(-iphi);
}

struct CombinedAmplitudes {
  cplx left_a{}, left_b{};
  cplx right_a{}, right_b{};
};

/// Asymptotic amplitudes of Phi = alpha psi1 + beta psi2 on both sides.
inline CombinedAmplitudes combine(cplx alpha, cplx beta,
                                  const AsymptoticCoeffs& c) {
  return {alpha * c.a1m + beta * c.a2m, alpha * c.b1m + beta * c.b2m,
          alpha * c.a1p + beta * c.a2p, alpha * c.b1p + beta * c.b2p};
}

}  // namespace ucoulomb
