#pragma once

// Channel scattering coefficients S_l(k), phase-shift curves, and total
// cross sections.
//
// Two independent routes to S_l(k):
//   DetRatio: S = conj(D)/D with D = det K_l(k^2+i0)
//   Direct:   S = 1 - 2ik b^T Theta K_l(k^2+i0)^{-1} b
// Both are exposed; their agreement is one of the library's standing
// consistency checks.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "boundary.hpp"
#include "cmatrix.hpp"
#include "errors.hpp"
#include "model.hpp"
#include "parallel.hpp"

namespace deltashell {

enum class SMethod { DetRatio, Direct };

struct ChannelResult {
  int ell = 0;
  double k = 0.0;
  std::complex<double> s_value{1.0, 0.0};
  double delta = 0.0;                     // principal value, -arg det K^+
  std::complex<double> det_plus{1.0, 0.0};
  SMethod method = SMethod::DetRatio;
};

namespace detail {

// Hadamard-style magnitude scale of a determinant: product of row maxima.
inline double det_scale(const CMatrix& m) {
  double scale = 1.0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    double big = 0.0;
    for (std::size_t j = 0; j < m.dim(); ++j) big = std::max(big, std::abs(m(i, j)));
    scale *= big;
  }
  return scale;
}

}  // namespace detail

inline ChannelResult s_coefficient(const ShellConfig& cfg, int ell, double k) {
  detail::require_positive_k(k, "s_coefficient");
  ChannelResult r;
  r.ell = ell;
  r.k = k;
  if (cfg.empty()) return r;
  const CMatrix km = k_matrix(cfg, ell, k, BoundarySide::Plus);
  const std::complex<double> det = determinant(km);
  if (std::abs(det) < 1e-13 * detail::det_scale(km))
    throw NearSingularBoundary("s_coefficient: |det K| = " + std::to_string(std::abs(det)) +
                               " at ell=" + std::to_string(ell) + ", k=" + std::to_string(k));
  r.det_plus = det;
  r.s_value = std::conj(det) / det;
  r.delta = -std::arg(det);
  return r;
}

inline ChannelResult s_coefficient_direct(const ShellConfig& cfg, int ell, double k) {
  detail::require_positive_k(k, "s_coefficient_direct");
  ChannelResult r;
  r.ell = ell;
  r.k = k;
  r.method = SMethod::Direct;
  if (cfg.empty()) return r;
  const CMatrix km = k_matrix(cfg, ell, k, BoundarySide::Plus);
  const BVector b = b_vector(cfg, ell, k);
  std::vector<std::complex<double>> rhs(b.values.begin(), b.values.end());
  const std::vector<std::complex<double>> c = solve(km, rhs);
  std::complex<double> quad = 0.0;
  for (std::size_t j = 0; j < cfg.size(); ++j) quad += b.values[j] * cfg.thetas[j] * c[j];
  r.s_value = 1.0 - std::complex<double>(0.0, 2.0 * k) * quad;
  r.det_plus = determinant(km);
  r.delta = -std::arg(r.det_plus);
  return r;
}

struct PhaseCurve {
  int ell = 0;
  std::vector<double> k_grid;
  std::vector<double> deltas;   // continuous along the grid
  std::string branch_anchor;
};

namespace detail {

inline double principal_delta(const ShellConfig& cfg, int ell, double k) {
  return s_coefficient(cfg, ell, k).delta;
}

// Walk the continuous branch from (ka, da) to kb whose principal phase is
// raw_b.  The pi-multiple shift is blind to a full pi swing inside one
// interval (a sharp resonance contributes a jump that is 0 mod pi), so each
// top-level interval is verified through two bisection levels and bisected
// further while the shift stays ambiguous.  This tracks resonances whose
// width is comparable to the grid spacing; still narrower features are the
// caller's grid to resolve.
inline double continue_branch(const ShellConfig& cfg, int ell, double ka, double da, double kb,
                              double raw_b, int depth, int verify_levels) {
  const double pi = std::numbers::pi;
  const double cand = raw_b + pi * std::round((da - raw_b) / pi);
  const bool ambiguous = std::abs(cand - da) > 0.45 * pi;
  if (!ambiguous && verify_levels <= 0) return cand;
  if (depth >= 28) {
    if (ambiguous)
      throw GridTooCoarse("phase unwrap could not resolve the branch near k=" +
                          std::to_string(kb));
    return cand;
  }
  const double km = 0.5 * (ka + kb);
  const double dm = continue_branch(cfg, ell, ka, da, km, principal_delta(cfg, ell, km),
                                    depth + 1, verify_levels - 1);
  return continue_branch(cfg, ell, km, dm, kb, raw_b, depth + 1, verify_levels - 1);
}

}  // namespace detail

inline PhaseCurve phase_curve(const ShellConfig& cfg, int ell, std::vector<double> k_grid,
                              unsigned threads = 1) {
  if (k_grid.empty()) throw ConfigError("phase_curve: empty grid");
  for (std::size_t i = 0; i < k_grid.size(); ++i) {
    if (!(k_grid[i] > 0.0)) throw ConfigError("phase_curve: grid values must be positive");
    if (i > 0 && !(k_grid[i] > k_grid[i - 1]))
      throw ConfigError("phase_curve: grid must be strictly increasing");
  }
  const double pi = std::numbers::pi;

  PhaseCurve pc;
  pc.ell = ell;
  std::vector<double> raw(k_grid.size());
  parallel_for(k_grid.size(), threads,
               [&](std::size_t i) { raw[i] = detail::principal_delta(cfg, ell, k_grid[i]); });

  pc.deltas.resize(k_grid.size());
  pc.deltas[0] = raw[0];
  for (std::size_t i = 1; i < k_grid.size(); ++i)
    pc.deltas[i] = detail::continue_branch(cfg, ell, k_grid[i - 1], pc.deltas[i - 1], k_grid[i],
                                           raw[i], 0, 2);

  // global pi-multiple so the value at the smallest k lies in (-pi/2, pi/2]
  const double shift = std::ceil((pc.deltas[0] - 0.5 * pi) / pi);
  if (shift != 0.0)
    for (double& d : pc.deltas) d -= shift * pi;
  pc.branch_anchor = "shifted by " + std::to_string(-static_cast<long>(shift)) +
                     "*pi so that delta(k_min) lies in (-pi/2, pi/2]";
  pc.k_grid = std::move(k_grid);
  return pc;
}

struct CrossSection {
  double k = 0.0;
  double total = 0.0;
  std::vector<double> terms;  // per-channel contributions, l = 0..ell_max
};

inline int default_ell_max(const ShellConfig& cfg, double k) {
  if (cfg.empty()) return 0;
  return static_cast<int>(std::ceil(k * cfg.outer_radius())) + 8;
}

inline CrossSection total_cross_section(const ShellConfig& cfg, double k, int ell_max) {
  detail::require_positive_k(k, "total_cross_section");
  if (ell_max < 0) throw ConfigError("total_cross_section: ell_max must be non-negative");
  CrossSection cs;
  cs.k = k;
  cs.terms.assign(ell_max + 1, 0.0);
  if (cfg.empty()) return cs;
  const double pi = std::numbers::pi;
  for (int ell = 0; ell <= ell_max; ++ell) {
    const std::complex<double> s = s_coefficient(cfg, ell, k).s_value;
    const double sin2 = 0.25 * std::norm(s - 1.0);  // branch-independent sin^2(delta)
    cs.terms[ell] = 4.0 * pi / (k * k) * (2 * ell + 1) * sin2;
    cs.total += cs.terms[ell];
  }
  return cs;
}

}  // namespace deltashell
