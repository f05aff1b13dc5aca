#pragma once

// Independent verification of the closed-form amplitudes: integrate the
// Schroedinger equation along the contour in the real parameter s with an
// adaptive Dormand-Prince 5(4) scheme, match the endpoints onto the Coulomb
// log-phase waveforms, and extract transmission/reflection numerically.
//
// Two path strategies are used. integrate_contour() follows the literal
// U path. transport() and the amplitude extraction continue the solution
// along a homotopy-equivalent detour whose circular bridge has radius
// max(2 eps, 1/k): with small eps and large L the two local solutions differ
// by eps^{-(2L+1)} in magnitude at the bottom of the U, which double
// precision cannot carry, while on the widened bridge the spread stays
// moderate. Both paths wind below the origin once, so both produce the same
// analytic continuation.

#include <array>
#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

#include "ucoulomb/asymptotics.hpp"
#include "ucoulomb/contour.hpp"
#include "ucoulomb/model.hpp"
#include "ucoulomb/scattering.hpp"

namespace ucoulomb {

struct IntegrationResult {
  struct Sample {
    double s = 0.0;
    cplx psi{}, dpsi_ds{};
  };
  std::vector<Sample> samples;
  double min_step = 0.0, max_step = 0.0;
  long n_steps = 0;
  double est_error = 0.0;
};

namespace detail {

using state = std::array<cplx, 2>;

// A path piece parametrized by arclength t in [t0, t1]: either a straight
// line x(t) = x0 + dir (t - t0) or an arc x = r e^{i(th0 + (t - t0)/r)}.
struct Segment {
  bool is_arc = false;
  double t0 = 0.0, t1 = 0.0;
  cplx x0{}, dir{};        // line
  double radius = 0.0, th0 = 0.0;  // arc
  cplx x(double t) const {
    if (!is_arc) return x0 + dir * (t - t0);
    double th = th0 + (t - t0) / radius;
    return radius * cplx(std::cos(th), std::sin(th));
  }
  cplx dx(double t) const {
    if (!is_arc) return dir;
    return cplx(0.0, 1.0) * x(t) / radius;
  }
  cplx ddx(double t) const {
    if (!is_arc) return cplx(0.0);
    return -x(t) / (radius * radius);
  }
};

// psi'' = (x''/x') psi' + (x')^2 (V(x) + k^2) psi along a segment
inline state rhs(const Segment& seg, const PhysParams& params, cplx k2,
                 double t, const state& y) {
  cplx x = seg.x(t), xp = seg.dx(t), xpp = seg.ddx(t);
  cplx inv = 1.0 / x;
  cplx V = cplx(0.0, params.Z) * inv +
           params.L * (params.L + 1.0) * inv * inv;
  return {y[1], xpp / xp * y[1] + xp * xp * (V + k2) * y[0]};
}

// Dormand-Prince 5(4) with standard step control; integrates one segment,
// optionally recording accepted steps.
inline void dp54_segment(const Segment& seg, const PhysParams& params, cplx k,
                         double t_from, double t_to, state& y, double tol,
                         IntegrationResult* rec) {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5,
                          c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                          a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600,
                          e3 = 500.0 / 1113 - 7571.0 / 16695,
                          e4 = 125.0 / 192 - 393.0 / 640,
                          e5 = -2187.0 / 6784 + 92097.0 / 339200,
                          e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

  cplx k2 = k * k;
  double span = t_to - t_from;
  double dirn = (span >= 0.0) ? 1.0 : -1.0;
  double t = t_from;
  double h = dirn * std::min(std::abs(span), 0.1 / std::max(1.0, std::abs(k)));
  double hmin = 1e-12 * (std::abs(span) + 1.0);
  double atol = 1e-14;

  while (dirn * (t_to - t) > 0.0) {
    if (dirn * (t + h) > dirn * t_to) h = t_to - t;
    state k1 = rhs(seg, params, k2, t, y);
    state k2s, k3, k4, k5, k6, k7, y5;
    auto lin = [&](std::initializer_list<std::pair<double, const state*>> terms) {
      state r = y;
      for (auto& [c, v] : terms) {
        r[0] += h * c * (*v)[0];
        r[1] += h * c * (*v)[1];
      }
      return r;
    };
    k2s = rhs(seg, params, k2, t + c2 * h, lin({{a21, &k1}}));
    k3 = rhs(seg, params, k2, t + c3 * h, lin({{a31, &k1}, {a32, &k2s}}));
    k4 = rhs(seg, params, k2, t + c4 * h,
             lin({{a41, &k1}, {a42, &k2s}, {a43, &k3}}));
    k5 = rhs(seg, params, k2, t + c5 * h,
             lin({{a51, &k1}, {a52, &k2s}, {a53, &k3}, {a54, &k4}}));
    k6 = rhs(seg, params, k2, t + h,
             lin({{a61, &k1}, {a62, &k2s}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
    y5 = lin({{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    k7 = rhs(seg, params, k2, t + h, y5);

    double err = 0.0;
    for (int i = 0; i < 2; ++i) {
      cplx e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                    e6 * k6[i] + e7 * k7[i]);
      double sc = atol + tol * std::max(std::abs(y[i]), std::abs(y5[i]));
      err = std::max(err, std::abs(e) / sc);
    }
    if (err <= 1.0) {
      t += h;
      y = y5;
      if (rec) {
        rec->samples.push_back({t, y[0], y[1]});
        double ah = std::abs(h);
        rec->min_step = rec->n_steps ? std::min(rec->min_step, ah) : ah;
        rec->max_step = std::max(rec->max_step, ah);
        ++rec->n_steps;
        rec->est_error += err * tol;
      }
    }
    double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
    h *= std::clamp(fac, 0.2, 5.0);
    if (std::abs(h) < hmin)
      throw step_underflow("integration step underflow on the contour");
  }
}

// The literal U path as segments covering [s_from, s_to] (s-parametrized).
inline std::vector<Segment> u_path(double eps, double s_from, double s_to) {
  constexpr double pi = std::numbers::pi;
  double half = 0.5 * pi * eps;
  std::vector<Segment> segs;
  auto add = [&](double a, double b) {
    if (!(a < b)) return;
    Segment s;
    s.t0 = a;
    s.t1 = b;
    if (b <= -half) {
      s.is_arc = false;
      s.x0 = cplx(-eps, -(a + half));
      s.dir = cplx(0.0, -1.0);
    } else if (a >= half) {
      s.is_arc = false;
      s.x0 = cplx(eps, a - half);
      s.dir = cplx(0.0, 1.0);
    } else {
      s.is_arc = true;
      s.radius = eps;
      s.th0 = a / eps + 1.5 * pi;
    }
    segs.push_back(s);
  };
  double lo = std::min(s_from, s_to), hi = std::max(s_from, s_to);
  add(lo, std::min(hi, -half));
  add(std::max(lo, -half), std::min(hi, half));
  add(std::max(lo, half), hi);
  if (s_from > s_to) std::reverse(segs.begin(), segs.end());
  return segs;
}

// Arm-plus-bridge detour from s_neg < 0 to s_pos > 0; bridge radius
// rho >= 2 eps. Arms are s-parametrized, the bridge by its own arclength.
inline std::vector<Segment> bridged_path(double eps, double s_neg,
                                         double s_pos, double rho) {
  constexpr double pi = std::numbers::pi;
  double half = 0.5 * pi * eps;
  double h = std::sqrt(rho * rho - eps * eps);
  double s0 = half + h;  // |s| of the joints
  double th_l = std::atan2(h, -eps);
  double th_r = 2.0 * pi + std::atan2(h, eps);
  std::vector<Segment> segs(3);
  segs[0] = {false, s_neg, -s0, cplx(-eps, -(s_neg + half)), cplx(0.0, -1.0),
             0.0, 0.0};
  segs[1] = {true, 0.0, rho * (th_r - th_l), cplx(), cplx(), rho, th_l};
  segs[2] = {false, s0, s_pos, cplx(eps, h), cplx(0.0, 1.0), 0.0, 0.0};
  return segs;
}

}  // namespace detail

/// Integrate psi'' = (V + k^2) psi (in the x form, transported to s) along
/// the literal U contour from s_from to s_to.
inline IntegrationResult integrate_contour(const PhysParams& params, cplx k,
                                           double s_from, double s_to,
                                           std::pair<cplx, cplx> init,
                                           double tol) {
  validate(params);
  if (!(tol > 0.0)) throw invalid_config("integrate_contour: tol must be > 0");
  if (k == cplx(0.0)) throw zero_wavenumber();
  IntegrationResult res;
  detail::state y{init.first, init.second};
  res.samples.push_back({s_from, y[0], y[1]});
  for (const auto& seg : detail::u_path(params.eps, s_from, s_to)) {
    double a = (s_from < s_to) ? seg.t0 : seg.t1;
    double b = (s_from < s_to) ? seg.t1 : seg.t0;
    detail::dp54_segment(seg, params, k, a, b, y, tol, &res);
  }
  return res;
}

/// Continue (psi, dpsi/ds) from s_from to s_to (both with |s| beyond the
/// bridge joints) along the conditioning-friendly detour. Tangent-direction
/// jumps at the joints are absorbed by rescaling the derivative, since
/// dpsi/dx is continuous.
inline std::pair<cplx, cplx> transport(const PhysParams& params, cplx k,
                                       double s_from, double s_to,
                                       std::pair<cplx, cplx> init, double tol) {
  validate(params);
  if (k == cplx(0.0)) throw zero_wavenumber();
  double rho =
      std::max(2.0 * params.eps, std::min(1.0, 1.0 / std::abs(k)));
  bool forward = s_from < s_to;
  double s_neg = forward ? s_from : s_to;
  double s_pos = forward ? s_to : s_from;
  if (!(s_neg < 0.0 && s_pos > 0.0))
    throw invalid_config("transport: endpoints must straddle the bridge");
  auto segs = detail::bridged_path(params.eps, s_neg, s_pos, rho);
  if (!forward) std::reverse(segs.begin(), segs.end());

  detail::state y{init.first, init.second};
  cplx prev_tangent{};
  bool have_prev = false;
  for (const auto& seg : segs) {
    double a = forward ? seg.t0 : seg.t1;
    double b = forward ? seg.t1 : seg.t0;
    cplx tan_in = seg.dx(a);
    if (have_prev) y[1] *= tan_in / prev_tangent;
    detail::dp54_segment(seg, params, k, a, b, y, tol, nullptr);
    prev_tangent = seg.dx(b);
    have_prev = true;
  }
  return {y[0], y[1]};
}

// ---------------------------------------------------------------------------
// Matching waveforms. On the right arm x = i sigma with sigma = s - pi eps/2
// - i eps, and the equation becomes the radial Coulomb form
//   psi'' + (k^2 + Z/sigma - L(L+1)/sigma^2) psi = 0.
// The outgoing/ingoing waveforms are e^{+-i phi(sigma)} u(sigma) with
// phi = k sigma + Z/(2k) ln(2 k sigma) and u an inverse-power series whose
// coefficients follow from the ODE; the series is truncated at its smallest
// term. The left arm reduces to the same form in tau = -(s + pi eps/2) + i eps
// with the roles of the two waveforms exchanged.
// ---------------------------------------------------------------------------

namespace detail {

struct Waveform {
  cplx value{}, deriv{};  // derivative with respect to s
};

// e^{sign * i phi(sigma)} times the corrective series, plus d/dsigma.
inline Waveform coulomb_waveform_sigma(double Z, double L, cplx k, cplx sigma,
                                       int sign) {
  cplx qq = L * (L + 1.0) + Z * Z / (4.0 * k * k);
  cplx u = 1.0, du = 0.0, c = 1.0;
  double best = std::numeric_limits<double>::max();
  for (int n = 0; n < 40; ++n) {
    cplx num = double(n) * double(n + 1) - qq -
               cplx(0.0, double(sign)) * (Z / k) * (n + 0.5);
    cplx cn = c * num / (cplx(0.0, double(sign)) * 2.0 * k * double(n + 1));
    double mag = std::abs(cn) / std::pow(std::abs(sigma), n + 1);
    if (mag >= best) break;
    best = mag;
    c = cn;
    cplx spow = std::pow(sigma, -(n + 1.0));
    u += c * spow;
    du += -double(n + 1) * c * spow / sigma;
    if (mag < 1e-18) break;
  }
  cplx phi = k * sigma + Z / (2.0 * k) * std::log(2.0 * k * sigma);
  cplx dphi = k + Z / (2.0 * k * sigma);
  cplx e = std::exp(cplx(0.0, double(sign)) * phi);
  Waveform w;
  w.value = e * u;
  w.deriv = e * (cplx(0.0, double(sign)) * dphi * u + du);
  return w;
}

// Waveforms W+ (coefficient a) and W- (coefficient b) at station s on the
// given arm, as functions of s, together with the constant factors that
// convert sigma-basis amplitudes to the s-basis used by the closed forms.
struct WavePair {
  Waveform wp, wm;   // multiply a and b respectively
  cplx conv_a{}, conv_b{};  // s-basis amplitude = conv * sigma-basis amplitude
};

inline WavePair matching_basis(const PhysParams& params, cplx k, double s,
                               Side side) {
  constexpr double pi = std::numbers::pi;
  WavePair wp;
  cplx i(0.0, 1.0);
  cplx shift = pi * params.eps / 2.0 + i * params.eps;
  if (side == Side::right) {
    cplx sigma = s - shift;
    wp.wp = coulomb_waveform_sigma(params.Z, params.L, k, sigma, +1);
    wp.wm = coulomb_waveform_sigma(params.Z, params.L, k, sigma, -1);
    wp.conv_a = std::exp(-i * k * shift);  // e^{-ik pi eps/2} e^{k eps}
    wp.conv_b = std::exp(i * k * shift);
  } else {
    // On the left arm, tau = -s - pi eps/2 + i eps turns the equation into
    // the right-arm form with d/ds = -d/dtau; e^{-i phi(tau)} carries the
    // coefficient a, e^{+i phi(tau)} carries b.
    cplx tau = -s - pi * params.eps / 2.0 + i * params.eps;
    Waveform m = coulomb_waveform_sigma(params.Z, params.L, k, tau, -1);
    Waveform p = coulomb_waveform_sigma(params.Z, params.L, k, tau, +1);
    m.deriv = -m.deriv;  // chain rule to s
    p.deriv = -p.deriv;
    wp.wp = m;
    wp.wm = p;
    cplx c = std::exp(i * k * (pi * params.eps / 2.0 - i * params.eps));
    wp.conv_a = c;        // e^{+ik pi eps/2} e^{k eps}
    wp.conv_b = 1.0 / c;
  }
  return wp;
}

// Solve [wp wm; wp' wm'] (A,B) = (psi, dpsi) and convert to the s basis.
inline std::pair<cplx, cplx> decompose(const WavePair& basis, cplx psi,
                                       cplx dpsi) {
  cplx det = basis.wp.value * basis.wm.deriv - basis.wp.deriv * basis.wm.value;
  double norm1 = std::abs(basis.wp.value) + std::abs(basis.wm.value) +
                 std::abs(basis.wp.deriv) + std::abs(basis.wm.deriv);
  if (!(std::abs(det) > norm1 * norm1 * 1e-8))
    throw ill_conditioned_matching("waveform matching matrix is singular");
  cplx A = (psi * basis.wm.deriv - dpsi * basis.wm.value) / det;
  cplx B = (basis.wp.value * dpsi - basis.wp.deriv * psi) / det;
  return {A * basis.conv_a, B * basis.conv_b};
}

}  // namespace detail

/// Numeric transmission/reflection amplitudes: seed a pure incoming waveform
/// on one arm, continue across, decompose at the far station, and compose
/// the incoming-from-left and incoming-from-right scattering solutions with
/// unit incoming amplitude.
inline ScatteringAmplitudes extract_numeric_amplitudes(const PhysParams& params,
                                                       double k_real,
                                                       double s_match,
                                                       double tol) {
  validate(params);
  if (!(k_real > 0.0)) throw zero_wavenumber();
  if (!(s_match >= std::max(500.0, 1e4 * params.eps)))
    throw invalid_config("extract: s_match below the asymptotic threshold");
  cplx k(k_real, 0.0);
  double S = s_match;

  auto left = detail::matching_basis(params, k, -S, Side::left);
  auto right = detail::matching_basis(params, k, S, Side::right);

  // u: seeded at -S as the pure right-moving waveform (sigma basis)
  auto uend = transport(params, k, -S, S,
                        {left.wp.value, left.wp.deriv}, tol);
  auto [A, B] = detail::decompose(right, uend.first, uend.second);
  // v: seeded at +S as the pure left-moving waveform
  auto vend = transport(params, k, S, -S,
                        {right.wm.value, right.wm.deriv}, tol);
  auto [C, D] = detail::decompose(left, vend.first, vend.second);

  // s-basis seed amplitudes
  cplx ua = left.conv_a;   // u = ua * W+ at the left, no W- admixture
  cplx vb = right.conv_b;  // v = vb * W- at the right

  // Phi = gamma u + delta v.
  // L -> R: no incoming from the right, unit incoming from the left.
  ScatteringAmplitudes sa;
  sa.k = k;
  sa.params = params;
  {
    cplx gamma = 1.0, delta = -gamma * B / vb;
    cplx norm = gamma * ua + delta * C;  // incoming amplitude from the left
    gamma /= norm;
    delta /= norm;
    sa.t_lr = gamma * A;
    sa.r_lr = delta * D;
  }
  // R -> L: no incoming from the left, unit incoming from the right.
  {
    cplx delta = 1.0, gamma = -delta * C / ua;
    cplx norm = gamma * B + delta * vb;  // incoming amplitude from the right
    gamma /= norm;
    delta /= norm;
    sa.t_rl = delta * D;
    sa.r_rl = gamma * A;
  }
  return sa;
}

}  // namespace ucoulomb
