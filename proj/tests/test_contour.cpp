#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ucoulomb/contour.hpp"

using ucoulomb::contour_point;
using ucoulomb::cplx;
constexpr double pi = std::numbers::pi;

TEST_CASE("spot values on all three branches (eps = 2)") {
  auto bottom = contour_point(2.0, 0.0);
  CHECK(std::abs(bottom.x - cplx(0.0, -2.0)) < 1e-15);
  CHECK(bottom.theta == doctest::Approx(1.5 * pi).epsilon(1e-15));

  auto seam = contour_point(2.0, pi);  // s = pi*eps/2, right junction
  CHECK(std::abs(seam.x - cplx(2.0, 0.0)) < 1e-15);
  CHECK(seam.theta == doctest::Approx(2.0 * pi).epsilon(1e-15));

  auto arm = contour_point(2.0, 5.0);
  CHECK(std::abs(arm.x - cplx(2.0, 5.0 - pi)) < 1e-14);

  auto larm = contour_point(2.0, -5.0);
  CHECK(std::abs(larm.x - cplx(-2.0, 5.0 - pi)) < 1e-14);
}

TEST_CASE("position, tangent, and angle are continuous at the junctions") {
  for (double eps : {0.005, 0.1, 2.0}) {
    for (double sj : {pi * eps / 2.0, -pi * eps / 2.0}) {
      auto in = contour_point(eps, sj - 1e-12);
      auto out = contour_point(eps, sj + 1e-12);
      CHECK(std::abs(in.x - out.x) < 1e-11);
      CHECK(std::abs(in.dxds - out.dxds) < 1e-9);
      CHECK(std::abs(in.theta - out.theta) < 1e-9);
    }
  }
}

TEST_CASE("PT symmetry x(-s) = -conj(x(s)) on 1e4 points") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> u(0.0, 50.0);
  for (double eps : {0.005, 0.1}) {
    for (int i = 0; i < 10000; ++i) {
      double s = u(rng);
      cplx a = contour_point(eps, s).x;
      cplx b = contour_point(eps, -s).x;
      CHECK(std::abs(b + std::conj(a)) <= 1e-15 * std::max(1.0, std::abs(a)));
    }
  }
}

TEST_CASE("unit-speed parametrization") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-30.0, 30.0);
  for (int i = 0; i < 2000; ++i) {
    auto p = contour_point(0.005, u(rng));
    CHECK(std::abs(std::abs(p.dxds) - 1.0) < 1e-15);
  }
}

TEST_CASE("theta stays in (pi/2, 5pi/2) and increases with s") {
  double eps = 0.01;
  double prev = 0.0;
  bool first = true;
  for (int i = 0; i <= 4000; ++i) {
    double s = -20.0 + 40.0 * i / 4000.0;
    auto p = contour_point(eps, s);
    CHECK(p.theta > 0.5 * pi);
    CHECK(p.theta < 2.5 * pi);
    if (!first) CHECK(p.theta >= prev - 1e-12);
    prev = p.theta;
    first = false;
  }
}

TEST_CASE("contour_log inverts through exp") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(-40.0, 40.0);
  for (double eps : {0.005, 0.1}) {
    for (int i = 0; i < 1000; ++i) {
      auto p = contour_point(eps, u(rng));
      cplx lg = ucoulomb::contour_log(p);
      CHECK(std::abs(std::exp(lg) - p.x) < 1e-13 * std::max(1.0, std::abs(p.x)));
    }
  }
}

TEST_CASE("branch_power matches numeric continuation of the log") {
  // Integrate d(log x)/ds = x'/x along the contour from a reference point
  // and compare against the closed-form branch assignment.
  double eps = 0.05;
  double s0 = 10.0, s1 = -10.0;
  auto ref = contour_point(eps, s0);
  cplx acc = ucoulomb::contour_log(ref);
  int n = 400000;
  double h = (s1 - s0) / n;
  for (int i = 0; i < n; ++i) {
    double sa = s0 + h * i;
    auto pa = contour_point(eps, sa);
    auto pm = contour_point(eps, sa + 0.5 * h);
    auto pb = contour_point(eps, sa + h);
    cplx fa = pa.dxds / pa.x, fm = pm.dxds / pm.x, fb = pb.dxds / pb.x;
    acc += h / 6.0 * (fa + 4.0 * fm + fb);
  }
  auto end = contour_point(eps, s1);
  CHECK(std::abs(acc - ucoulomb::contour_log(end)) < 1e-8);

  cplx a(0.37, -1.2);
  cplx direct = ucoulomb::branch_power(end, a);
  cplx continued = std::exp(a * acc);
  CHECK(std::abs(direct - continued) / std::abs(direct) < 1e-7);
}

TEST_CASE("curvature is -x/eps^2 on the circle and zero on the arms") {
  double eps = 0.02;
  auto c = contour_point(eps, 0.0);
  CHECK(std::abs(ucoulomb::contour_curvature(eps, c) + c.x / (eps * eps)) <
        1e-12);
  auto arm = contour_point(eps, 1.0);
  CHECK(ucoulomb::contour_curvature(eps, arm) == cplx(0.0));
}
