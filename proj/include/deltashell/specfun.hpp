#pragma once

// Spherical Bessel functions j_l, y_l of integer order with first
// derivatives, for real and complex arguments, plus the spherical Hankel
// functions h_l^(1) = j + i y and h_l^(2) = j - i y.
//
// Real arguments run through a purely real kernel, so the imaginary parts
// of the returned values are exactly zero in that case.

#include <cmath>
#include <complex>
#include <vector>

#include "errors.hpp"

namespace deltashell {

inline constexpr int kMaxBesselOrder = 64;

struct BesselTable {
  int ell_max = 0;
  std::complex<double> argument;
  std::vector<std::complex<double>> j;
  std::vector<std::complex<double>> y;
  std::vector<std::complex<double>> jp;
  std::vector<std::complex<double>> yp;
};

namespace detail {

inline constexpr double kSmallBesselArg = 1e-4;
inline constexpr double kRecurrenceBig = 1e250;

// 3-term ascending series; used for |z| < kSmallBesselArg where the
// closed forms for j0, y1 lose digits to cancellation.
template <typename T>
void bessel_series_small(int m, T z, std::vector<T>& j, std::vector<T>& y) {
  const T u = 0.5 * z * z;
  T zpow = T(1);             // z^l
  double dfac_j = 1.0;       // (2l+1)!!
  double dfac_y = 1.0;       // (2l-1)!!
  for (int l = 0; l <= m; ++l) {
    if (l > 0) {
      dfac_j *= 2 * l + 1;
      dfac_y *= 2 * l - 1;
    }
    const double a1 = 2 * l + 3, a2 = 2 * l + 5;
    const double b1 = 1 - 2 * l, b2 = 3 - 2 * l;
    j[l] = zpow / dfac_j * (T(1) - u / a1 + u * u / (2.0 * a1 * a2));
    y[l] = -dfac_y / (zpow * z) * (T(1) - u / b1 + u * u / (2.0 * b1 * b2));
    zpow *= z;
  }
}

// j_l and y_l for l = 0..m.  y goes upward from its closed forms; j goes
// upward when |z| dominates the top order and downward (Miller) otherwise,
// normalized against the closed form of whichever of j0, j1 is larger.
template <typename T>
void bessel_orders(int m, T z, std::vector<T>& j, std::vector<T>& y) {
  j.assign(m + 1, T(0));
  y.assign(m + 1, T(0));
  const double az = std::abs(z);

  if (az < kSmallBesselArg) {
    bessel_series_small(m, z, j, y);
    return;
  }

  const T sz = std::sin(z);
  const T cz = std::cos(z);
  const T inv = T(1) / z;

  y[0] = -cz * inv;
  if (m >= 1) {
    y[1] = (-cz * inv - sz) * inv;
    for (int n = 1; n < m; ++n) y[n + 1] = double(2 * n + 1) * inv * y[n] - y[n - 1];
  }

  const T j0c = sz * inv;
  const T j1c = (sz * inv - cz) * inv;
  if (m == 0) {
    j[0] = j0c;
    return;
  }

  if (az >= double(m)) {
    // upward recurrence is stable while the order stays below |z|
    j[0] = j0c;
    j[1] = j1c;
    for (int n = 1; n < m; ++n) j[n + 1] = double(2 * n + 1) * inv * j[n] - j[n - 1];
    return;
  }

  // Miller downward recurrence, start order m + 16 + ceil(|z|)
  const int start = m + 16 + static_cast<int>(std::ceil(az));
  T fnp1 = T(0);
  T fn = T(1e-30);
  for (int n = start; n >= 1; --n) {
    T fnm1 = double(2 * n + 1) * inv * fn - fnp1;
    fnp1 = fn;
    fn = fnm1;
    if (n - 1 <= m) j[n - 1] = fn;
    if (std::abs(fn) > kRecurrenceBig) {
      const double rescale = 1.0 / kRecurrenceBig;
      fn *= rescale;
      fnp1 *= rescale;
      for (int i = n - 1; i <= m; ++i) j[i] *= rescale;
    }
  }
  // pick the better-conditioned normalization anchor
  const T scale = (std::abs(j[0]) >= std::abs(j[1])) ? j0c / j[0] : j1c / j[1];
  for (int n = 0; n <= m; ++n) j[n] *= scale;
}

// f'_l = f_{l-1} - (l+1)/z f_l, and f'_0 = -f_1
template <typename T>
void bessel_derivatives(int ell_max, T z, const std::vector<T>& f, std::vector<T>& fp) {
  fp.assign(ell_max + 1, T(0));
  fp[0] = -f[1];
  for (int l = 1; l <= ell_max; ++l) fp[l] = f[l - 1] - double(l + 1) / z * f[l];
}

inline void fill_table(BesselTable& t, int ell_max, double x) {
  const int m = std::max(ell_max, 1);
  std::vector<double> j, y, jp, yp;
  bessel_orders(m, x, j, y);
  bessel_derivatives(ell_max, x, j, jp);
  bessel_derivatives(ell_max, x, y, yp);
  t.j.resize(ell_max + 1);
  t.y.resize(ell_max + 1);
  t.jp.resize(ell_max + 1);
  t.yp.resize(ell_max + 1);
  for (int l = 0; l <= ell_max; ++l) {
    t.j[l] = {j[l], 0.0};
    t.y[l] = {y[l], 0.0};
    t.jp[l] = {jp[l], 0.0};
    t.yp[l] = {yp[l], 0.0};
  }
}

inline void fill_table(BesselTable& t, int ell_max, std::complex<double> z) {
  const int m = std::max(ell_max, 1);
  std::vector<std::complex<double>> j, y;
  bessel_orders(m, z, j, y);
  bessel_derivatives(ell_max, z, j, t.jp);
  bessel_derivatives(ell_max, z, y, t.yp);
  j.resize(ell_max + 1);
  y.resize(ell_max + 1);
  t.j = std::move(j);
  t.y = std::move(y);
}

// h^(1)_l or h^(2)_l for l = 0..m by upward recurrence from the exponential
// closed forms.  Forming j + i y instead would cancel catastrophically on
// the positive imaginary axis (both terms ~ e^{|z|}, the result ~ e^{-|z|});
// the recurrence is stable upward since h is the dominant solution.
inline std::vector<std::complex<double>> hankel_orders(int kind, int m, std::complex<double> z) {
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> sign = (kind == 1) ? i : -i;
  const std::complex<double> expo = std::exp(sign * z);
  std::vector<std::complex<double>> h(m + 1);
  h[0] = -sign * expo / z;
  if (m >= 1) {
    h[1] = -expo * (z + sign) / (z * z);
    for (int n = 1; n < m; ++n) h[n + 1] = double(2 * n + 1) / z * h[n] - h[n - 1];
  }
  return h;
}

}  // namespace detail

inline BesselTable bessel_basis(int ell_max, std::complex<double> z) {
  if (ell_max < 0) throw ConfigError("bessel_basis: order must be non-negative");
  if (ell_max > kMaxBesselOrder)
    throw OrderTooLarge("bessel_basis: ell_max " + std::to_string(ell_max) + " exceeds " +
                        std::to_string(kMaxBesselOrder));
  if (z == std::complex<double>(0.0, 0.0)) throw ZeroArgument("bessel_basis: z = 0");

  BesselTable t;
  t.ell_max = ell_max;
  t.argument = z;
  if (z.imag() == 0.0) {
    detail::fill_table(t, ell_max, z.real());
  } else {
    detail::fill_table(t, ell_max, z);
  }
  return t;
}

inline std::complex<double> hankel(int kind, int ell, std::complex<double> z) {
  if (kind != 1 && kind != 2) throw ConfigError("hankel: kind must be 1 or 2");
  if (z.imag() == 0.0) {
    // j and y have comparable size on the real axis, so j +- i y is exact
    // there and keeps hankel(2) the bitwise conjugate of hankel(1)
    const BesselTable t = bessel_basis(ell, z);
    const std::complex<double> i(0.0, 1.0);
    return kind == 1 ? t.j[ell] + i * t.y[ell] : t.j[ell] - i * t.y[ell];
  }
  if (ell < 0) throw ConfigError("hankel: order must be non-negative");
  if (ell > kMaxBesselOrder)
    throw OrderTooLarge("hankel: ell " + std::to_string(ell) + " exceeds " +
                        std::to_string(kMaxBesselOrder));
  if (z == std::complex<double>(0.0, 0.0)) throw ZeroArgument("hankel: z = 0");
  return detail::hankel_orders(kind, ell, z)[ell];
}

}  // namespace deltashell
