#pragma once

// Reduced boundary matrices per angular-momentum channel:
//   m_l(k^2 + i0)_{ij} = i k j_l(k min(R_i,R_j)) h1_l(k max(R_i,R_j))
//   K_l = I + m_l Theta,   Theta = diag(theta_1, ..., theta_N)
// plus the evaluation at negative energy -kappa^2 (argument i kappa r) and
// the vector b_l(k) = (j_l(k R_1), ..., j_l(k R_N)).
//
// The k^2 - i0 side equals the entrywise conjugate of the k^2 + i0 side and
// is produced that way; the direct evaluation through sqrt(k^2-i0) = -k is
// kept as a diagnostic.

#include <complex>
#include <string>
#include <vector>

#include "cmatrix.hpp"
#include "errors.hpp"
#include "model.hpp"
#include "specfun.hpp"

namespace deltashell {

enum class BoundarySide { Plus, Minus };

struct BVector {
  int ell = 0;
  double k = 0.0;
  std::vector<double> values;
};

namespace detail {

inline void require_positive_k(double k, const char* who) {
  if (!(k > 0.0)) throw ConfigError(std::string(who) + ": k must be positive");
}

// symmetric N x N matrix with entries scale * j[min(i,j)] * h[max(i,j)]
inline CMatrix outer_symmetric(const std::vector<std::complex<double>>& jv,
                               const std::vector<std::complex<double>>& hv,
                               std::complex<double> scale) {
  const std::size_t n = jv.size();
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const std::complex<double> v = scale * jv[i] * hv[j];  // radii are sorted ascending
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

}  // namespace detail

inline CMatrix m_matrix(const ShellConfig& cfg, int ell, double k, BoundarySide side) {
  detail::require_positive_k(k, "m_matrix");
  if (cfg.empty()) return CMatrix();
  const std::size_t n = cfg.size();
  std::vector<std::complex<double>> jv(n), hv(n);
  for (std::size_t i = 0; i < n; ++i) {
    const BesselTable t = bessel_basis(ell, k * cfg.radii[i]);
    jv[i] = t.j[ell];
    hv[i] = t.j[ell] + std::complex<double>(0.0, 1.0) * t.y[ell];
  }
  CMatrix m = detail::outer_symmetric(jv, hv, std::complex<double>(0.0, k));
  if (side == BoundarySide::Minus) m = conjugated(m);
  return m;
}

// diagnostic: the k^2 - i0 side evaluated through sqrt(k^2-i0) = -k instead
// of by conjugation
inline CMatrix m_matrix_minus_by_reflection(const ShellConfig& cfg, int ell, double k) {
  detail::require_positive_k(k, "m_matrix_minus_by_reflection");
  if (cfg.empty()) return CMatrix();
  const std::size_t n = cfg.size();
  std::vector<std::complex<double>> jv(n), hv(n);
  for (std::size_t i = 0; i < n; ++i) {
    const BesselTable t = bessel_basis(ell, -k * cfg.radii[i]);
    jv[i] = t.j[ell];
    hv[i] = t.j[ell] + std::complex<double>(0.0, 1.0) * t.y[ell];
  }
  return detail::outer_symmetric(jv, hv, std::complex<double>(0.0, -k));
}

inline CMatrix k_matrix(const ShellConfig& cfg, int ell, double k, BoundarySide side) {
  CMatrix km = m_matrix(cfg, ell, k, side);
  for (std::size_t j = 0; j < cfg.size(); ++j) km.scale_column(j, cfg.thetas[j]);
  for (std::size_t i = 0; i < cfg.size(); ++i) km(i, i) += 1.0;
  return km;
}

// m_l(-kappa^2): argument i kappa r on the branch with Im sqrt(z) > 0.  The
// entries are real; the residual imaginary parts from the complex evaluation
// are checked against 1e-10 relative and then zeroed.
inline CMatrix m_matrix_negative(const ShellConfig& cfg, int ell, double kappa) {
  if (!(kappa > 0.0)) throw ConfigError("m_matrix_negative: kappa must be positive");
  if (cfg.empty()) return CMatrix();
  const std::size_t n = cfg.size();
  const std::complex<double> ik(0.0, kappa);
  std::vector<std::complex<double>> jv(n), hv(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::complex<double> z = ik * cfg.radii[i];
    jv[i] = bessel_basis(ell, z).j[ell];
    hv[i] = detail::hankel_orders(1, ell, z)[ell];
  }
  CMatrix m = detail::outer_symmetric(jv, hv, std::complex<double>(0.0, 1.0) * ik);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::complex<double> v = m(i, j);
      if (std::abs(v.imag()) > 1e-10 * std::abs(v))
        throw BranchResidual("m_matrix_negative: entry (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ") has relative imaginary part " +
                             std::to_string(std::abs(v.imag()) / std::abs(v)));
      m(i, j) = v.real();
    }
  return m;
}

inline CMatrix k_matrix_negative(const ShellConfig& cfg, int ell, double kappa) {
  CMatrix km = m_matrix_negative(cfg, ell, kappa);
  for (std::size_t j = 0; j < cfg.size(); ++j) km.scale_column(j, cfg.thetas[j]);
  for (std::size_t i = 0; i < cfg.size(); ++i) km(i, i) += 1.0;
  return km;
}

inline BVector b_vector(const ShellConfig& cfg, int ell, double k) {
  detail::require_positive_k(k, "b_vector");
  BVector b;
  b.ell = ell;
  b.k = k;
  b.values.resize(cfg.size());
  for (std::size_t i = 0; i < cfg.size(); ++i)
    b.values[i] = bessel_basis(ell, k * cfg.radii[i]).j[ell].real();
  return b;
}

}  // namespace deltashell
