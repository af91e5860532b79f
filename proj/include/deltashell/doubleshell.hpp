#pragma once

// Closed forms for the two-shell s-wave channel: the real pair (A0, B0)
// with k^2 R1^2 R2^2 det K_0(k^2+i0) = A0 + i B0, the threshold constants
// C0, Gamma0, C2 with
//   A0(k) = C0 k^2 + C2 k^4 + O(k^6),   B0(k) = Gamma0 k^3 + O(k^5),
// the regime classification at k = 0, the scattering length Gamma0/C0 in
// the regular regime, and the piecewise-harmonic zero-energy solution.

#include <cmath>
#include <complex>
#include <optional>
#include <string>

#include "errors.hpp"
#include "model.hpp"

namespace deltashell {

enum class ThresholdRegime { Regular, ExceptionalNondegenerate, Degenerate };

inline const char* to_string(ThresholdRegime r) {
  switch (r) {
    case ThresholdRegime::Regular: return "Regular";
    case ThresholdRegime::ExceptionalNondegenerate: return "ExceptionalNondegenerate";
    default: return "Degenerate";
  }
}

struct ThresholdReport {
  double c0 = 0.0;
  double gamma0 = 0.0;
  double c2 = 0.0;
  ThresholdRegime regime = ThresholdRegime::Regular;
  std::optional<double> scattering_length;  // present iff Regular
};

struct ZeroEnergySolution {
  double a = 0.0;  // interior constant, 0 < r < R1
  double b = 0.0;  // f = b + c/r on R1 < r < R2
  double c = 0.0;
  double d = 0.0;  // f = d + e/r on r > R2
  double e = 0.0;
};

struct ABCoefficients {
  double a0 = 0.0;
  double b0 = 0.0;
};

inline ABCoefficients ab_coefficients(const DoubleShellConfig& cfg, double k) {
  if (!(k > 0.0)) throw ConfigError("ab_coefficients: k must be positive");
  const double r1 = cfg.r1(), r2 = cfg.r2(), t1 = cfg.theta1(), t2 = cfg.theta2();
  const double s1 = std::sin(k * r1), c1 = std::cos(k * r1);
  const double s2 = std::sin(k * r2), c2 = std::cos(k * r2);
  ABCoefficients ab;
  ab.a0 = r1 * r1 * r2 * r2 * k * k + r1 * r1 * k * c2 * s2 * t2 + r2 * r2 * k * c1 * s1 * t1 +
          t1 * t2 * (c1 * c2 * s1 * s2 - c2 * c2 * s1 * s1);
  ab.b0 = r1 * r1 * k * s2 * s2 * t2 + r2 * r2 * k * s1 * s1 * t1 +
          t1 * t2 * s1 * s2 * (c1 * s2 - c2 * s1);
  return ab;
}

namespace detail {

inline double c0_constant(double r1, double r2, double t1, double t2) {
  return r1 * r1 * r2 * r2 + r1 * r1 * r2 * t2 + r1 * r2 * r2 * t1 +
         t1 * t2 * r1 * (r2 - r1);
}

inline double gamma0_constant(double r1, double r2, double t1, double t2) {
  return r1 * r1 * r2 * r2 * (t1 + t2) + t1 * t2 * r1 * r2 * (r2 - r1);
}

inline double c2_constant(double r1, double r2, double t1, double t2) {
  return -2.0 / 3.0 * r1 * r1 * r2 * r2 * r2 * t2 - 2.0 / 3.0 * r1 * r1 * r1 * r2 * r2 * t1 +
         t1 * t2 *
             (-2.0 / 3.0 * (r1 * r1 * r1 * r2 + r1 * r2 * r2 * r2) + r1 * r1 * r2 * r2 +
              r1 * r1 * r1 * r1 / 3.0);
}

// dimensionally scaled classification tolerances (length^4 and length^6)
inline double c0_tolerance(double r1, double r2, double t1, double t2) {
  const double s = 1.0 + std::abs(t1) + std::abs(t2);
  return 1e-10 * r1 * r1 * r2 * r2 * s * s;
}

inline double c2_tolerance(double r1, double r2, double t1, double t2) {
  const double s = 1.0 + std::abs(t1) + std::abs(t2);
  return 1e-10 * r1 * r1 * r2 * r2 * r2 * r2 * s * s;
}

}  // namespace detail

inline ThresholdReport threshold_constants(const DoubleShellConfig& cfg) {
  const double r1 = cfg.r1(), r2 = cfg.r2(), t1 = cfg.theta1(), t2 = cfg.theta2();
  ThresholdReport rep;
  rep.c0 = detail::c0_constant(r1, r2, t1, t2);
  rep.gamma0 = detail::gamma0_constant(r1, r2, t1, t2);
  rep.c2 = detail::c2_constant(r1, r2, t1, t2);
  if (std::abs(rep.c0) > detail::c0_tolerance(r1, r2, t1, t2)) {
    rep.regime = ThresholdRegime::Regular;
    rep.scattering_length = rep.gamma0 / rep.c0;
  } else if (std::abs(rep.c2) > detail::c2_tolerance(r1, r2, t1, t2)) {
    rep.regime = ThresholdRegime::ExceptionalNondegenerate;
  } else {
    rep.regime = ThresholdRegime::Degenerate;
  }
  return rep;
}

// theta2 solving C0 = 0 for fixed (R1, R2, theta1); absent when the linear
// coefficient vanishes
inline std::optional<double> critical_theta2(double r1, double r2, double theta1) {
  if (!(r1 > 0.0) || !(r2 > r1)) throw ConfigError("critical_theta2: need 0 < R1 < R2");
  const double den = r1 * r1 * r2 + theta1 * r1 * (r2 - r1);
  const double den_scale = r1 * r1 * r2 + std::abs(theta1) * r1 * (r2 - r1);
  if (std::abs(den) <= 1e-12 * den_scale) return std::nullopt;
  return -(r1 * r1 * r2 * r2 + r1 * r2 * r2 * theta1) / den;
}

inline double scattering_length(const DoubleShellConfig& cfg) {
  const ThresholdReport rep = threshold_constants(cfg);
  if (!rep.scattering_length)
    throw ThresholdCritical("scattering_length: C0 = " + std::to_string(rep.c0) +
                            " is below the classification tolerance");
  return *rep.scattering_length;
}

inline ZeroEnergySolution zero_energy_solution(const DoubleShellConfig& cfg, double a) {
  if (a == 0.0) throw ConfigError("zero_energy_solution: interior constant must be nonzero");
  const double r1 = cfg.r1(), r2 = cfg.r2(), t1 = cfg.theta1(), t2 = cfg.theta2();
  ZeroEnergySolution z;
  z.a = a;
  z.c = -t1 * a;
  z.b = a + t1 / r1 * a;
  const double value_r2 = z.b + z.c / r2;
  z.e = z.c - t2 * value_r2;       // jump relation at R2
  z.d = value_r2 - z.e / r2;       // continuity at R2
  return z;
}

inline std::complex<double> s0_closed_form(const DoubleShellConfig& cfg, double k) {
  const ABCoefficients ab = ab_coefficients(cfg, k);
  const std::complex<double> den(ab.a0, ab.b0);
  const double r1 = cfg.r1(), r2 = cfg.r2();
  const double scale = k * k * r1 * r1 * r2 * r2 + std::abs(cfg.theta2()) * k * r1 * r1 +
                       std::abs(cfg.theta1()) * k * r2 * r2 +
                       2.0 * std::abs(cfg.theta1() * cfg.theta2());
  if (std::abs(den) < 1e-13 * scale)
    throw NearSingularBoundary("s0_closed_form: |A0 + iB0| = " + std::to_string(std::abs(den)) +
                               " at k=" + std::to_string(k));
  return std::complex<double>(ab.a0, -ab.b0) / den;
}

}  // namespace deltashell
