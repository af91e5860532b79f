#pragma once

// Independent verifications of the boundary-matrix scattering data.
//
// transfer_matrix_s: semi-analytic matching.  The reduced radial function
// w(r) = k r j_l(kr) regular at the origin is carried across each shell by
// continuity plus the derivative jump w'(R+) - w'(R-) = alpha w(R); between
// shells it is re-expanded in the Riccati pair {k r j_l, k r y_l} through
// the closed-form 2x2 inversion given by their Wronskian, and in the
// exterior it is projected onto {k r h2_l, k r h1_l} as (beta2, beta1) with
// S = beta1/beta2.
//
// numerov_phase_shift: direct fourth-order integration of
// w'' = (l(l+1)/r^2 - k^2) w on a piecewise-uniform grid whose nodes
// contain the shell radii; the jump is applied at the shell node and the
// exterior tail is fitted against the free Riccati pair.
//
// zero_energy_exterior: general-N propagation of the piecewise-harmonic
// zero-energy solution A + B/r, returning the exterior pair (d, e).

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "errors.hpp"
#include "model.hpp"
#include "specfun.hpp"

namespace deltashell {

namespace detail {

struct RiccatiPair {
  double s, sp;  // k r j_l(kr) and d/dr
  double c, cp;  // k r y_l(kr) and d/dr
};

inline RiccatiPair riccati_pair(int ell, double k, double r) {
  const double t = k * r;
  const BesselTable tb = bessel_basis(ell, t);
  const double j = tb.j[ell].real(), jp = tb.jp[ell].real();
  const double y = tb.y[ell].real(), yp = tb.yp[ell].real();
  // Wronskian (k r j)(k r y)' - (k r j)'(k r y) = k
  return {t * j, k * (j + t * jp), t * y, k * (y + t * yp)};
}

}  // namespace detail

inline std::complex<double> transfer_matrix_s(const ShellConfig& cfg, int ell, double k) {
  if (!(k > 0.0)) throw ConfigError("transfer_matrix_s: k must be positive");
  if (cfg.empty()) return 1.0;

  double w = 0.0, wp = 0.0;
  double a = 1.0, b = 0.0;  // w = a (k r j) + b (k r y) on the current annulus
  for (std::size_t j = 0; j < cfg.size(); ++j) {
    const detail::RiccatiPair rb = detail::riccati_pair(ell, k, cfg.radii[j]);
    if (!std::isfinite(rb.s) || !std::isfinite(rb.c) || !std::isfinite(rb.sp) ||
        !std::isfinite(rb.cp))
      throw DegenerateBasis("transfer_matrix_s: basis overflow at shell " +
                            std::to_string(j + 1));
    w = a * rb.s + b * rb.c;
    wp = a * rb.sp + b * rb.cp;
    wp += cfg.alphas[j] * w;
    a = (w * rb.cp - wp * rb.c) / k;
    b = (wp * rb.s - w * rb.sp) / k;
  }

  // project onto the Riccati-Hankel pair at the outermost shell;
  // Wronskian (k r h2)(k r h1)' - (k r h2)'(k r h1) = 2ik
  const double rn = cfg.outer_radius();
  const double t = k * rn;
  const BesselTable tb = bessel_basis(ell, t);
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> h1 = tb.j[ell] + i * tb.y[ell];
  const std::complex<double> h1p = tb.jp[ell] + i * tb.yp[ell];
  const std::complex<double> H1 = t * h1, H1p = k * (h1 + t * h1p);
  const std::complex<double> H2 = std::conj(H1), H2p = std::conj(H1p);
  const std::complex<double> two_ik(0.0, 2.0 * k);
  const std::complex<double> beta2 = (w * H1p - wp * H1) / two_ik;
  const std::complex<double> beta1 = (wp * H2 - w * H2p) / two_ik;
  if (!(std::abs(beta2) > 0.0))
    throw DegenerateBasis("transfer_matrix_s: vanishing incoming coefficient");
  return beta1 / beta2;
}

namespace detail {

// Taylor step data for w'' = q(r) w with q = l(l+1)/r^2 - k^2; all the
// derivatives of q are available in closed form, which gives O(h^6) local
// accuracy for segment starts and one-sided derivative recovery.
struct RadialPotential {
  double lam;  // l(l+1)
  double k2;
  double q(double r) const { return lam / (r * r) - k2; }
  double q1(double r) const { return -2.0 * lam / (r * r * r); }
  double q2(double r) const { return 6.0 * lam / (r * r * r * r); }
  double q3(double r) const { return -24.0 * lam / (r * r * r * r * r); }
};

// w(x + h) from (w, w') at x
inline double taylor_step(const RadialPotential& pot, double x, double h, double w, double wp) {
  const double q = pot.q(x), q1 = pot.q1(x), q2 = pot.q2(x), q3 = pot.q3(x);
  const double cw = 1.0 + h * h * q / 2.0 + h * h * h * q1 / 6.0 +
                    h * h * h * h * (q2 + q * q) / 24.0 +
                    h * h * h * h * h * (q3 + 4.0 * q * q1) / 120.0;
  const double cs = h + h * h * h * q / 6.0 + h * h * h * h * q1 / 12.0 +
                    h * h * h * h * h * (3.0 * q2 + q * q) / 120.0;
  return cw * w + cs * wp;
}

// w'(x) from w(x) and the previous node value w(x - h)
inline double derivative_from_left(const RadialPotential& pot, double x, double h, double w,
                                   double w_left) {
  const double q = pot.q(x), q1 = pot.q1(x), q2 = pot.q2(x), q3 = pot.q3(x);
  const double cw = 1.0 + h * h * q / 2.0 - h * h * h * q1 / 6.0 +
                    h * h * h * h * (q2 + q * q) / 24.0 -
                    h * h * h * h * h * (q3 + 4.0 * q * q1) / 120.0;
  const double cs = -h - h * h * h * q / 6.0 + h * h * h * h * q1 / 12.0 -
                    h * h * h * h * h * (3.0 * q2 + q * q) / 120.0;
  return (w_left - cw * w) / cs;
}

// ascending series of the regular solution, w ~ r^{l+1}(1 + a1 r^2 + a2 r^4);
// accurate to O((kr)^6), which seeds the first two grid nodes without the
// Taylor step (useless there: the centrifugal term diverges at the origin)
inline double regular_series_start(int ell, double k, double r) {
  const double a1 = -k * k / (2.0 * (2.0 * ell + 3.0));
  const double a2 = k * k * k * k / (8.0 * (2.0 * ell + 3.0) * (2.0 * ell + 5.0));
  return std::pow(r, ell + 1) * (1.0 + a1 * r * r + a2 * r * r * r * r);
}

}  // namespace detail

inline double numerov_phase_shift(const ShellConfig& cfg, int ell, double k, double r_max,
                                  long steps) {
  if (!(k > 0.0)) throw ConfigError("numerov_phase_shift: k must be positive");
  if (steps < 10000) throw ConfigError("numerov_phase_shift: need at least 10^4 steps");
  if (cfg.empty()) return 0.0;
  const double rn = cfg.outer_radius();
  if (!(r_max > 2.0 * rn)) throw ConfigError("numerov_phase_shift: r_max must exceed 2 R_N");

  const double pi = std::numbers::pi;
  const double r0 = 1e-3 * std::min(cfg.radii.front(), 1.0 / k);
  const double h_target = (r_max - r0) / double(steps);
  for (std::size_t j = 1; j < cfg.size(); ++j)
    if (cfg.radii[j] - cfg.radii[j - 1] < h_target)
      throw GridCollision("shells " + std::to_string(j) + " and " + std::to_string(j + 1) +
                          " are closer than one grid step");

  std::vector<double> breaks;
  breaks.push_back(r0);
  for (double r : cfg.radii) breaks.push_back(r);
  breaks.push_back(r_max);

  const detail::RadialPotential pot{double(ell) * double(ell + 1), k * k};

  // choose the exterior fit node: r_max minus a quarter wavelength, capped
  // at half the exterior range so both points stay outside the last shell
  const double offset = std::min(0.5 * pi / k, 0.5 * (r_max - rn));
  const double fit_target = r_max - offset;

  double w = 0.0, wp = 0.0;
  double fit_w = 0.0, fit_r = 0.0;

  for (std::size_t seg = 0; seg + 1 < breaks.size(); ++seg) {
    const double xa = breaks[seg], xb = breaks[seg + 1];
    const long n = std::max<long>(1, std::lround((xb - xa) / h_target));
    const double h = (xb - xa) / double(n);
    const bool exterior = (seg + 2 == breaks.size());
    long fit_idx = -1;
    if (exterior) {
      fit_idx = std::clamp(std::lround((fit_target - xa) / h), long(0), n - 1);
    }

    double u_prev, u_curr;
    if (seg == 0) {
      u_prev = detail::regular_series_start(ell, k, xa);
      u_curr = detail::regular_series_start(ell, k, xa + h);
    } else {
      u_prev = w;
      u_curr = detail::taylor_step(pot, xa, h, w, wp);
    }
    if (exterior && fit_idx == 0) {
      fit_w = u_prev;
      fit_r = xa;
    }
    if (exterior && fit_idx == 1) {
      fit_w = u_curr;
      fit_r = xa + h;
    }
    double g_prev = -pot.q(xa);
    double g_curr = -pot.q(xa + h);
    for (long t = 1; t < n; ++t) {
      const double x_next = xa + double(t + 1) * h;
      const double g_next = -pot.q(x_next);
      const double u_next = (2.0 * u_curr * (1.0 - 5.0 * h * h * g_curr / 12.0) -
                             u_prev * (1.0 + h * h * g_prev / 12.0)) /
                            (1.0 + h * h * g_next / 12.0);
      u_prev = u_curr;
      u_curr = u_next;
      g_prev = g_curr;
      g_curr = g_next;
      if (exterior && t + 1 == fit_idx) {
        fit_w = u_curr;
        fit_r = x_next;
      }
    }
    w = u_curr;
    wp = detail::derivative_from_left(pot, xb, h, u_curr, u_prev);
    if (!exterior) wp += cfg.alphas[seg] * w;  // shell sits at xb
  }

  // fit w = A (k r j_l) + B (k r y_l) at the recorded node and at r_max
  const detail::RiccatiPair pa = detail::riccati_pair(ell, k, fit_r);
  const detail::RiccatiPair pb = detail::riccati_pair(ell, k, r_max);
  const double det = pa.s * pb.c - pa.c * pb.s;
  const double det_scale = std::max(std::abs(pa.s * pb.c), std::abs(pa.c * pb.s));
  if (std::abs(det) <= 1e-12 * det_scale)
    throw DegenerateBasis("numerov_phase_shift: collinear exterior fit points");
  const double a = (fit_w * pb.c - pa.c * w) / det;
  const double b = (pa.s * w - fit_w * pb.s) / det;

  double delta = std::atan2(-b, a);
  // reduce mod pi to (-pi/2, pi/2]
  if (delta > 0.5 * pi) delta -= pi;
  if (delta <= -0.5 * pi) delta += pi;
  return delta;
}

struct ExteriorHarmonic {
  double d = 1.0;
  double e = 0.0;
};

inline ExteriorHarmonic zero_energy_exterior(const ShellConfig& cfg) {
  double constant = 1.0, tail = 0.0;  // f = constant + tail/r
  for (std::size_t j = 0; j < cfg.size(); ++j) {
    const double r = cfg.radii[j];
    const double value = constant + tail / r;
    const double tail_next = tail - cfg.thetas[j] * value;
    constant = value - tail_next / r;
    tail = tail_next;
  }
  return {constant, tail};
}

}  // namespace deltashell
