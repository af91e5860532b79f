#pragma once

// Dense complex square matrices of small dimension (<= 64) with the two
// operations the boundary-matrix formulas need: determinant and linear
// solve.  LU with partial pivoting on row-equilibrated copies; the
// determinant of the empty matrix is 1 so that the shell-free case drops
// out of every formula.

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "errors.hpp"

namespace deltashell {

class CMatrix {
 public:
  using value_type = std::complex<double>;

  CMatrix() = default;
  explicit CMatrix(std::size_t n) : n_(n), a_(n * n) {}
  CMatrix(std::size_t n, std::initializer_list<value_type> init) : n_(n), a_(init) {
    if (a_.size() != n * n) throw ConfigError("CMatrix: entry count must be n*n");
  }

  static CMatrix identity(std::size_t n) {
    CMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t dim() const { return n_; }
  const std::vector<value_type>& entries() const { return a_; }

  value_type& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  void scale_column(std::size_t j, double s) {
    for (std::size_t i = 0; i < n_; ++i) a_[i * n_ + j] *= s;
  }

  CMatrix& operator+=(const CMatrix& o) {
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  CMatrix& operator-=(const CMatrix& o) {
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  CMatrix& operator*=(value_type s) {
    for (auto& v : a_) v *= s;
    return *this;
  }

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, value_type s) { return a *= s; }

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    CMatrix c(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        const value_type aik = a(i, k);
        for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

 private:
  std::size_t n_ = 0;
  std::vector<value_type> a_;
};

inline CMatrix conjugated(const CMatrix& m) {
  CMatrix c(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) c(i, j) = std::conj(m(i, j));
  return c;
}

inline double max_row_sum_norm(const CMatrix& m) {
  double norm = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < m.dim(); ++j) row += std::abs(m(i, j));
    norm = std::max(norm, row);
  }
  return norm;
}

namespace detail {

inline constexpr double kPivotThreshold = 1e-14;

struct LUFactors {
  std::size_t n = 0;
  std::vector<std::complex<double>> a;  // factors of the equilibrated matrix
  std::vector<std::size_t> perm;
  std::vector<double> row_scale;
  int sign = 1;
  bool singular = false;
};

inline LUFactors lu_factor(const CMatrix& m) {
  const std::size_t n = m.dim();
  LUFactors lu;
  lu.n = n;
  lu.a = m.entries();
  lu.perm.resize(n);
  lu.row_scale.assign(n, 1.0);

  for (std::size_t i = 0; i < n; ++i) {
    double big = 0.0;
    for (std::size_t j = 0; j < n; ++j) big = std::max(big, std::abs(lu.a[i * n + j]));
    if (big == 0.0) {
      lu.singular = true;
    } else {
      lu.row_scale[i] = big;
      for (std::size_t j = 0; j < n; ++j) lu.a[i * n + j] /= big;
    }
  }

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(lu.a[k * n + k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(lu.a[i * n + k]);
      if (v > best) {
        best = v;
        p = i;
      }
    }
    lu.perm[k] = p;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu.a[k * n + j], lu.a[p * n + j]);
      lu.sign = -lu.sign;
    }
    if (best <= kPivotThreshold) {
      lu.singular = true;
      continue;
    }
    const std::complex<double> inv_piv = 1.0 / lu.a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const std::complex<double> f = lu.a[i * n + k] * inv_piv;
      lu.a[i * n + k] = f;
      for (std::size_t j = k + 1; j < n; ++j) lu.a[i * n + j] -= f * lu.a[k * n + j];
    }
  }
  return lu;
}

}  // namespace detail

inline std::complex<double> determinant(const CMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1.0;
  const auto lu = detail::lu_factor(m);
  std::complex<double> det = double(lu.sign);
  for (std::size_t k = 0; k < n; ++k) det *= lu.a[k * n + k] * lu.row_scale[k];
  return det;
}

inline std::vector<std::complex<double>> solve(const CMatrix& m,
                                               const std::vector<std::complex<double>>& b) {
  const std::size_t n = m.dim();
  if (b.size() != n) throw ConfigError("solve: rhs length must match matrix dimension");
  if (n == 0) return {};
  const auto lu = detail::lu_factor(m);
  if (lu.singular) throw SingularMatrix("solve: pivot below threshold");

  // equilibrated system is (D^-1 M) x = D^-1 b; the permutation applies to
  // the scaled rows
  std::vector<std::complex<double>> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / lu.row_scale[i];
  for (std::size_t k = 0; k < n; ++k)
    if (lu.perm[k] != k) std::swap(x[k], x[lu.perm[k]]);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) x[i] -= lu.a[i * n + j] * x[j];
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t j = ii + 1; j < n; ++j) x[ii] -= lu.a[ii * n + j] * x[j];
    x[ii] /= lu.a[ii * n + ii];
  }
  return x;
}

}  // namespace deltashell
