#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ucoulomb/specfun.hpp"

using ucoulomb::cplx;
namespace sf = ucoulomb;

namespace {

// Independent Gamma oracle: Stirling series after shifting the argument by
// N = 24 via the recurrence, so the expansion variable is large enough for
// double precision regardless of the test point.
cplx lngamma_oracle(cplx z) {
  constexpr int shift = 24;
  // B_{2n} / (2n (2n-1)) for n = 1..8.
  constexpr double stirling[] = {
      1.0 / 12.0,          -1.0 / 360.0,         1.0 / 1260.0,
      -1.0 / 1680.0,       1.0 / 1188.0,         -691.0 / 360360.0,
      1.0 / 156.0,         -3617.0 / 122400.0};
  cplx corr = 0.0;
  for (int j = 0; j < shift; ++j) corr += std::log(z + double(j));
  cplx w = z + double(shift);
  cplx lg = (w - 0.5) * std::log(w) - w +
            0.5 * std::log(2.0 * std::numbers::pi);
  cplx wp = w;
  for (double c : stirling) {
    lg += c / wp;
    wp *= w * w;
  }
  return lg - corr;
}

cplx gamma_oracle(cplx z) { return std::exp(lngamma_oracle(z)); }

double rel(cplx got, cplx want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

// Absolute-value sum of the 1F1 Maclaurin terms, the natural backward-error
// scale: cancellation inside the series is real, so residuals must be
// measured against the largest intermediate, not the (possibly tiny) value.
double abssum_1f1(cplx a, cplx b, cplx z) {
  cplx term = 1.0;
  double sum = 1.0;
  for (int n = 0; n < 10000; ++n) {
    term *= (a + double(n)) / ((b + double(n)) * double(n + 1)) * z;
    sum += std::abs(term);
    if (std::abs(term) < 1e-18 * sum) break;
  }
  return sum;
}

}  // namespace

TEST_CASE("gamma matches known values") {
  CHECK(rel(sf::cgamma(5.0), 24.0) < 1e-14);
  CHECK(rel(sf::cgamma(1.0), 1.0) < 1e-14);
  CHECK(rel(sf::cgamma(0.5), std::sqrt(std::numbers::pi)) < 1e-14);
  CHECK(rel(sf::cgamma(cplx(0.0, 1.0)),
            cplx(-0.15494982830181068, -0.49801566811835604)) < 1e-13);
}

TEST_CASE("gamma matches the Stirling oracle off the real axis") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> re(-4.5, 6.0), im(-6.0, 6.0);
  for (int i = 0; i < 400; ++i) {
    cplx z(re(rng), im(rng));
    if (std::abs(z.imag()) < 0.05) continue;  // keep clear of the poles
    CHECK(rel(sf::cgamma(z), gamma_oracle(z)) < 1e-12);
  }
}

TEST_CASE("gamma recurrence and reflection") {
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> re(-4.0, 4.0), im(-4.0, 4.0);
  const double pi = std::numbers::pi;
  for (int i = 0; i < 200; ++i) {
    cplx z(re(rng), im(rng));
    if (std::abs(im(rng)) < 0.0) continue;
    if (std::abs(z.imag()) < 0.05) z += cplx(0.0, 0.1);
    CHECK(rel(sf::cgamma(z + 1.0), z * sf::cgamma(z)) < 1e-12);
    cplx lhs = sf::cgamma(z) * sf::cgamma(1.0 - z);
    cplx rhs = pi / std::sin(pi * z);
    CHECK(rel(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("gamma throws at nonpositive integers") {
  CHECK_THROWS_AS((void)sf::cgamma(0.0), ucoulomb::pole_at_nonpositive_integer);
  CHECK_THROWS_AS((void)sf::cgamma(-3.0),
                  ucoulomb::pole_at_nonpositive_integer);
}

TEST_CASE("clngamma agrees with std::lgamma on positive reals") {
  for (double x : {0.25, 0.5, 1.0, 2.5, 7.0, 30.0, 120.5}) {
    cplx lg = sf::clngamma(cplx(x, 0.0));
    CHECK(std::abs(lg.imag()) < 1e-13);
    CHECK(std::abs(lg.real() - std::lgamma(x)) <
          1e-13 * std::max(1.0, std::abs(std::lgamma(x))));
  }
}

TEST_CASE("reciprocal gamma is entire and vanishes at the poles") {
  CHECK(std::abs(sf::crgamma(0.0)) == 0.0);
  CHECK(std::abs(sf::crgamma(-1.0)) == 0.0);
  CHECK(std::abs(sf::crgamma(-7.0)) == 0.0);
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int i = 0; i < 100; ++i) {
    cplx z(u(rng), u(rng));
    if (std::abs(z.imag()) < 0.05) z += cplx(0.0, 0.1);
    CHECK(rel(sf::crgamma(z) * sf::cgamma(z), 1.0) < 1e-12);
  }
}

TEST_CASE("kummer series trivial cases") {
  CHECK(rel(sf::kummer_1f1(1.3, 2.7, 0.0, 1e-14).value, 1.0) == 0.0);
  CHECK(rel(sf::kummer_1f1(1.0, 1.0, 2.0, 1e-14).value, std::exp(2.0)) <
        1e-14);
  cplx z(1.5, -2.25);
  CHECK(rel(sf::kummer_1f1(cplx(0.7, 0.3), cplx(0.7, 0.3), z, 1e-14).value,
            std::exp(z)) < 1e-13);
}

TEST_CASE("kummer series terminates for polynomial cases") {
  auto r = sf::kummer_1f1(-3.0, 1.25, cplx(2.0, 1.0), 1e-14);
  CHECK(r.terms_used <= 8);
  // 1F1(-1, b, z) = 1 - z/b exactly.
  cplx z(0.4, -1.1), b(2.2, 0.0);
  CHECK(rel(sf::kummer_1f1(-1.0, b, z, 1e-14).value, 1.0 - z / b) < 1e-14);
}

TEST_CASE("kummer series rejects nonpositive integer b") {
  CHECK_THROWS_AS((void)sf::kummer_1f1(1.0, -2.0, 1.0, 1e-14),
                  ucoulomb::b_nonpositive_integer);
}

TEST_CASE("kummer transformation 1F1(a,b,z) = e^z 1F1(b-a,b,-z)") {
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> p(-5.0, 5.0), znorm(0.5, 20.0),
      ang(0.0, 2.0 * std::numbers::pi);
  int done = 0;
  while (done < 150) {
    cplx a(p(rng), p(rng)), b(p(rng), p(rng));
    if (ucoulomb::detail::near_nonpositive_integer(b, 0.1)) continue;
    double r0 = znorm(rng), th = ang(rng);
    cplx z = r0 * std::exp(cplx(0.0, th));
    cplx lhs = sf::kummer_1f1(a, b, z, 1e-15).value;
    cplx rhs = std::exp(z) * sf::kummer_1f1(b - a, b, -z, 1e-15).value;
    double scale = std::max(
        {1.0, abssum_1f1(a, b, z),
         std::exp(z.real()) * abssum_1f1(b - a, b, -z)});
    CHECK(std::abs(lhs - rhs) / scale < 1e-10);
    ++done;
  }
}

TEST_CASE("2F0 asymptotic series trivial cases") {
  CHECK(sf::hyp2f0_asymptotic(0.0, 1.7, cplx(0.05, 0.0), 40).value ==
        cplx(1.0));
  CHECK(sf::hyp2f0_asymptotic(1.2, 0.0, cplx(0.05, 0.0), 40).value ==
        cplx(1.0));
  // Two-term truncation check: 2F0(a,b,w) = 1 + a b w + a(a+1)b(b+1)w^2/2
  // + O(w^3).
  cplx w(0.001, 0.0005);
  auto r = sf::hyp2f0_asymptotic(1.5, 2.5, w, 40);
  cplx two = 1.0 + 1.5 * 2.5 * w + 1.5 * 2.5 * 2.5 * 3.5 * w * w / 2.0;
  CHECK(std::abs(r.value - two) < 100.0 * std::abs(w * w * w));
}

TEST_CASE("2F0 optimal truncation stops at the smallest term") {
  auto r = sf::hyp2f0_asymptotic(cplx(1.0, 0.5), cplx(0.5, -0.2),
                                 cplx(0.02, 0.01), 200);
  CHECK(r.terms_used > 3);
  CHECK(r.terms_used < 120);
  CHECK(r.est_error < 1e-10);
}

TEST_CASE("series and asymptotic 1F1 agree in the overlap 25 <= |z| <= 40") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> p(-3.0, 3.0), rad(25.0, 40.0),
      ang(0.05, std::numbers::pi - 0.05);
  int done = 0;
  while (done < 60) {
    cplx a(p(rng), p(rng)), b(p(rng), p(rng));
    if (ucoulomb::detail::near_nonpositive_integer(b, 0.1)) continue;
    if (ucoulomb::detail::near_nonpositive_integer(b - a, 0.1)) continue;
    if (ucoulomb::detail::near_nonpositive_integer(a, 0.1)) continue;
    double th = ang(rng);
    if (done % 2) th = -th;  // exercise both half planes
    cplx z = rad(rng) * std::exp(cplx(0.0, th));
    // Reference in the numerically stable direction: for Re z < 0 the
    // direct Maclaurin cancellation reaches e^{2|Re z|}, so evaluate the
    // Kummer-flipped series instead.
    sf::SeriesResult ser;
    if (z.real() >= 0.0) {
      ser = sf::kummer_1f1(a, b, z, 1e-15);
    } else {
      auto flip = sf::kummer_1f1(b - a, b, -z, 1e-15);
      cplx ez = std::exp(z);
      ser = {ez * flip.value, std::abs(ez) * flip.est_error, flip.terms_used};
    }
    auto asym = sf::hyp1f1_asymptotic(a, b, z);
    double scale = std::max(std::abs(ser.value), 1e-300);
    double budget = (ser.est_error + asym.est_error) / scale + 1e-8;
    CHECK(std::abs(ser.value - asym.value) / scale < budget);
    ++done;
  }
}

TEST_CASE("both 1F1 routes agree at the |z| = 30 switch") {
  // Angles keep Re z >= 0 so the Maclaurin reference stays well conditioned.
  cplx a(0.8, 0.3), b(2.4, -0.1);
  for (double th : {0.4, 1.3, -0.7, -1.3}) {
    cplx dir = std::exp(cplx(0.0, th));
    for (double r : {29.999, 30.001}) {
      cplx z = r * dir;
      cplx ser = sf::kummer_1f1(a, b, z, 1e-15).value;
      cplx asym = sf::hyp1f1_asymptotic(a, b, z).value;
      CHECK(std::abs(ser - asym) / std::abs(ser) < 1e-6);
      // and the dispatcher tracks them
      cplx d = sf::hyp1f1(a, b, z).value;
      CHECK(std::abs(d - ser) / std::abs(ser) < 1e-6);
    }
  }
}
