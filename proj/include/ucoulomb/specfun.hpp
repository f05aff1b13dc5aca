#pragma once

// Complex special functions: Gamma, log-Gamma, the confluent hypergeometric
// series 1F1 and the divergent asymptotic series 2F0, plus the large-|z|
// evaluation of 1F1 built from them.

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "ucoulomb/errors.hpp"

namespace ucoulomb {

struct SeriesResult {
  cplx value{};
  double est_error = 0.0;  // absolute
  int terms_used = 1;
};

namespace detail {

inline constexpr double pi = std::numbers::pi;

// Lanczos, g = 7, 9 terms.
inline constexpr double lanczos_g = 7.0;
inline constexpr double lanczos_c[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

inline bool near_nonpositive_integer(cplx z, double tol) {
  double r = std::round(z.real());
  return r <= 0.5 && std::abs(z.real() - r) <= tol && std::abs(z.imag()) <= tol;
}

// Lanczos sum and prefactor for Re(z) >= 0.5.
inline cplx lanczos_sum(cplx z) {
  cplx s = lanczos_c[0];
  for (int i = 1; i < 9; ++i) s += lanczos_c[i] / (z + cplx(i - 1, 0.0));
  return s;
}

}  // namespace detail

inline cplx clngamma(cplx z);

/// Gamma(z) for complex z, relative accuracy ~1e-13 for |z| <= 50 off poles.
inline cplx cgamma(cplx z) {
  using detail::pi;
  if (detail::near_nonpositive_integer(z, 1e-14))
    throw pole_at_nonpositive_integer(z);
  if (z.real() < 0.5) {
    // reflection
    return pi / (std::sin(pi * z) * cgamma(1.0 - z));
  }
  cplx t = z + (detail::lanczos_g - 0.5);
  return std::sqrt(2.0 * pi) * std::pow(t, z - 0.5) * std::exp(-t) *
         detail::lanczos_sum(z);
}

/// log Gamma(z); principal (real) on the positive real axis, and
/// exp(clngamma(z)) == cgamma(z) everywhere off the poles.
inline cplx clngamma(cplx z) {
  using detail::pi;
  if (detail::near_nonpositive_integer(z, 1e-14))
    throw pole_at_nonpositive_integer(z);
  if (z.real() < 0.5) {
    return std::log(cplx(pi)) - std::log(std::sin(pi * z)) - clngamma(1.0 - z);
  }
  cplx t = z + (detail::lanczos_g - 0.5);
  return 0.5 * std::log(2.0 * pi) + (z - 0.5) * std::log(t) - t +
         std::log(detail::lanczos_sum(z));
}

/// 1/Gamma(z); entire, returns 0 at the poles of Gamma.
inline cplx crgamma(cplx z) {
  using detail::pi;
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real()))
    return 0.0;  // exact zero at the poles of Gamma
  if (z.real() < 0.5) {
    // 1/Gamma(z) = Gamma(1-z) sin(pi z)/pi, finite everywhere
    return cgamma(1.0 - z) * std::sin(pi * z) / pi;
  }
  return 1.0 / cgamma(z);
}

/// Maclaurin series for 1F1(a; b; z). Terminates when three consecutive terms
/// fall below tol relative to the partial sum.
inline SeriesResult kummer_1f1(cplx a, cplx b, cplx z, double tol) {
  if (detail::near_nonpositive_integer(b, 1e-14))
    throw b_nonpositive_integer("1F1: b is a non-positive integer");
  if (!(tol > 0.0)) throw error("1F1: tol must be positive");
  constexpr int max_terms = 10000;
  cplx sum = 1.0, term = 1.0;
  double abs_sum = 1.0;  // tracks cancellation for the roundoff estimate
  double last[3] = {0.0, 0.0, 0.0};
  int small_streak = 0;
  for (int n = 0; n < max_terms; ++n) {
    term *= (a + double(n)) / (b + double(n)) * z / double(n + 1);
    sum += term;
    last[2] = last[1];
    last[1] = last[0];
    last[0] = std::abs(term);
    abs_sum += last[0];
    small_streak = (last[0] < tol * std::abs(sum)) ? small_streak + 1 : 0;
    if (small_streak >= 3) {
      double roundoff = std::numeric_limits<double>::epsilon() * abs_sum;
      return {sum, last[0] + last[1] + last[2] + roundoff, n + 2};
    }
  }
  throw no_convergence(max_terms);
}

/// Formally divergent series 2F0(a, b; w) = sum (a)_n (b)_n w^n / n! with
/// optimal (smallest-term) truncation. est_error is the first omitted term
/// inflated by exp(pi (|Im a| + |Im b|) / 2): for complex parameters the
/// smallest term alone is not a bound, since |(a)_n| can run ahead of
/// (Re a)_n by exactly such rotation factors.
inline SeriesResult hyp2f0_asymptotic(cplx a, cplx b, cplx w, int max_terms) {
  if (max_terms < 1) throw error("2F0: max_terms must be >= 1");
  const double inflate = std::exp(std::min(
      200.0, detail::pi * (std::abs(a.imag()) + std::abs(b.imag())) / 2.0));
  cplx sum = 1.0, term = 1.0;
  double prev = 1.0;
  int used = 1;
  for (int n = 0; n < max_terms - 1; ++n) {
    cplx next = term * (a + double(n)) * (b + double(n)) * w / double(n + 1);
    double mag = std::abs(next);
    if (mag >= prev && n > 0) {
      // terms started growing: stop before this one
      return {sum, mag * inflate, used};
    }
    term = next;
    sum += term;
    prev = mag;
    ++used;
    if (mag < 1e-18 * std::abs(sum)) return {sum, mag * inflate, used};
  }
  // ran out of terms; estimate by the next one
  cplx next =
      term * (a + double(used - 1)) * (b + double(used - 1)) * w / double(used);
  return {sum, std::abs(next) * inflate, used};
}

/// 1F1(a; b; z) for large |z| via the 2F0 asymptotic expansion, valid for
/// Im(z) > 0 (the branch of (1/z e^{i pi})^a is exp(a (i pi - log z)) with
/// the principal log). Im(z) < 0 is routed through the Kummer transformation.
inline SeriesResult hyp1f1_asymptotic(cplx a, cplx b, cplx z, int max_terms = 40) {
  using detail::pi;
  if (z.imag() < 0.0) {
    // 1F1(a,b,z) = e^z 1F1(b-a, b, -z)
    SeriesResult r = hyp1f1_asymptotic(b - a, b, -z, max_terms);
    cplx ez = std::exp(z);
    return {ez * r.value, std::abs(ez) * r.est_error, r.terms_used};
  }
  cplx lnz = std::log(z);
  cplx lgb = clngamma(b);

  SeriesResult f1 = hyp2f0_asymptotic(a, 1.0 + a - b, -1.0 / z, max_terms);
  cplx pre1 = crgamma(b - a) * std::exp(lgb + a * (cplx(0.0, pi) - lnz));
  SeriesResult f2 = hyp2f0_asymptotic(b - a, 1.0 - a, 1.0 / z, max_terms);
  cplx pre2 = crgamma(a) * std::exp(lgb + z + (a - b) * lnz);

  cplx value = pre1 * f1.value + pre2 * f2.value;
  double err = std::abs(pre1) * f1.est_error + std::abs(pre2) * f2.est_error;
  return {value, err, f1.terms_used + f2.terms_used};
}

/// 1F1 dispatcher: Maclaurin series for |z| <= 30, asymptotic beyond.
inline SeriesResult hyp1f1(cplx a, cplx b, cplx z, double tol = 1e-14) {
  if (std::abs(z) <= 30.0) return kummer_1f1(a, b, z, tol);
  return hyp1f1_asymptotic(a, b, z);
}

}  // namespace ucoulomb
