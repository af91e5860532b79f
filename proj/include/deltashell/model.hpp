#pragma once

// Shell configuration: radii 0 < R_1 < ... < R_N, strengths alpha_j, and
// the derived couplings theta_j = alpha_j R_j^2.  N = 0 is the free
// Hamiltonian.  Immutable after construction through validate().

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace deltashell {

struct ShellConfig {
  std::vector<double> radii;
  std::vector<double> alphas;
  std::vector<double> thetas;

  std::size_t size() const { return radii.size(); }
  bool empty() const { return radii.empty(); }
  double outer_radius() const { return radii.back(); }
};

inline ShellConfig validate(std::vector<double> radii, std::vector<double> alphas) {
  if (radii.size() != alphas.size())
    throw LengthMismatch("got " + std::to_string(radii.size()) + " radii and " +
                         std::to_string(alphas.size()) + " strengths");
  for (std::size_t j = 0; j < radii.size(); ++j) {
    if (!(radii[j] > 0.0))
      throw NonpositiveRadius("radius " + std::to_string(j + 1) + " is " +
                              std::to_string(radii[j]));
    if (j > 0 && !(radii[j] > radii[j - 1]))
      throw NonincreasingRadii("radius " + std::to_string(j + 1) +
                               " does not exceed its predecessor");
  }
  std::vector<double> thetas(radii.size());
  for (std::size_t j = 0; j < radii.size(); ++j) thetas[j] = alphas[j] * radii[j] * radii[j];
  return ShellConfig{std::move(radii), std::move(alphas), std::move(thetas)};
}

// convenience when a model is specified through the couplings theta_j
inline ShellConfig config_from_thetas(const std::vector<double>& radii,
                                      const std::vector<double>& thetas) {
  if (radii.size() != thetas.size())
    throw LengthMismatch("got " + std::to_string(radii.size()) + " radii and " +
                         std::to_string(thetas.size()) + " couplings");
  std::vector<double> alphas(radii.size());
  for (std::size_t j = 0; j < radii.size(); ++j) {
    if (!(radii[j] > 0.0))
      throw NonpositiveRadius("radius " + std::to_string(j + 1) + " is " +
                              std::to_string(radii[j]));
    alphas[j] = thetas[j] / (radii[j] * radii[j]);
  }
  return validate(radii, alphas);
}

struct DoubleShellConfig {
  ShellConfig shells;

  static DoubleShellConfig from(ShellConfig cfg) {
    if (cfg.size() != 2)
      throw ConfigError("double-shell operation requires exactly 2 shells, got " +
                        std::to_string(cfg.size()));
    return DoubleShellConfig{std::move(cfg)};
  }

  double r1() const { return shells.radii[0]; }
  double r2() const { return shells.radii[1]; }
  double theta1() const { return shells.thetas[0]; }
  double theta2() const { return shells.thetas[1]; }
};

inline DoubleShellConfig make_double_shell(double r1, double r2, double theta1, double theta2) {
  return DoubleShellConfig::from(config_from_thetas({r1, r2}, {theta1, theta2}));
}

}  // namespace deltashell
