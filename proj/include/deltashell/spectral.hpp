#pragma once

// Bound states per channel: the negative eigenvalues -kappa^2 are exactly
// the roots of det(I + m_l(-kappa^2) Theta).  The finder scans a geometric
// kappa grid for sign changes and refines each bracket by bisection; roots
// of even multiplicity produce no sign change and are not detected.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "boundary.hpp"
#include "cmatrix.hpp"
#include "errors.hpp"
#include "model.hpp"

namespace deltashell {

struct BoundState {
  int ell = 0;
  double kappa = 0.0;
  double energy = 0.0;  // -kappa^2
  double det_residual = 0.0;
};

inline double det_negative_energy(const ShellConfig& cfg, int ell, double kappa) {
  if (cfg.empty()) return 1.0;
  return determinant(k_matrix_negative(cfg, ell, kappa)).real();
}

inline std::vector<BoundState> find_bound_states(const ShellConfig& cfg, int ell,
                                                 double kappa_max, int grid_points) {
  if (!(kappa_max > 0.0)) throw ConfigError("find_bound_states: kappa_max must be positive");
  if (grid_points < 64) throw ConfigError("find_bound_states: need at least 64 grid points");
  std::vector<BoundState> states;
  if (cfg.empty()) return states;

  const double kappa_min = 1e-6;
  if (kappa_max <= kappa_min) return states;
  // geometric grid, ratio at most 1.05 so shallow roots near kappa = 0 resolve
  const double span = std::log(kappa_max / kappa_min);
  const int n = std::max(grid_points, static_cast<int>(std::ceil(span / std::log(1.05))) + 1);

  auto det_at = [&](double kappa) { return det_negative_energy(cfg, ell, kappa); };
  auto kappa_at = [&](int i) { return kappa_min * std::exp(span * double(i) / double(n - 1)); };

  double prev_kappa = kappa_at(0);
  double prev_det = det_at(prev_kappa);
  for (int i = 1; i < n; ++i) {
    const double cur_kappa = kappa_at(i);
    const double cur_det = det_at(cur_kappa);
    if (prev_det == 0.0) {
      states.push_back({ell, prev_kappa, -prev_kappa * prev_kappa, 0.0});
    } else if (prev_det * cur_det < 0.0) {
      double lo = prev_kappa, hi = cur_kappa, flo = prev_det;
      while (hi - lo > 1e-12 * hi) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = det_at(mid);
        if (fmid == 0.0) {
          lo = hi = mid;
          break;
        }
        if (flo * fmid < 0.0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fmid;
        }
      }
      const double root = 0.5 * (lo + hi);
      states.push_back({ell, root, -root * root, std::abs(det_at(root))});
    }
    prev_kappa = cur_kappa;
    prev_det = cur_det;
  }
  if (prev_det == 0.0) states.push_back({ell, prev_kappa, -prev_kappa * prev_kappa, 0.0});

  std::sort(states.begin(), states.end(),
            [](const BoundState& a, const BoundState& b) { return a.kappa > b.kappa; });
  return states;
}

}  // namespace deltashell
