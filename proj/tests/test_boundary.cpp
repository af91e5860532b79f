#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "deltashell/boundary.hpp"
#include "deltashell/smatrix.hpp"

using namespace deltashell;
using Catch::Approx;

namespace {

using cplx = std::complex<double>;

ShellConfig random_config(std::mt19937& rng, int max_shells = 5) {
  std::uniform_int_distribution<int> nd(1, max_shells);
  std::uniform_real_distribution<double> rd(0.1, 5.0);
  std::uniform_real_distribution<double> ad(-5.0, 5.0);
  const int n = nd(rng);
  std::vector<double> radii(n), alphas(n);
  for (;;) {
    for (auto& r : radii) r = rd(rng);
    std::sort(radii.begin(), radii.end());
    bool ok = true;
    for (int i = 1; i < n; ++i)
      if (radii[i] - radii[i - 1] < 1e-3) ok = false;
    if (ok) break;
  }
  for (auto& a : alphas) a = ad(rng);
  return validate(radii, alphas);
}

}  // namespace

TEST_CASE("single shell m entry closed form") {
  // s-wave: entry = sin(kR) e^{ikR} / (k R^2)
  const ShellConfig cfg = validate({1.0}, {1.0});
  const CMatrix m = m_matrix(cfg, 0, 1.0, BoundarySide::Plus);
  const cplx expected = std::sin(1.0) * std::exp(cplx(0.0, 1.0));
  REQUIRE(std::abs(m(0, 0) - expected) < 1e-14);
  REQUIRE(m(0, 0).real() == Approx(0.454649).epsilon(1e-5));
  REQUIRE(m(0, 0).imag() == Approx(0.708073).epsilon(1e-5));
}

TEST_CASE("minus side is the conjugate, and the reflection path agrees") {
  std::mt19937 rng(101);
  for (int rep = 0; rep < 30; ++rep) {
    const ShellConfig cfg = random_config(rng);
    std::uniform_real_distribution<double> kd(0.05, 10.0);
    const double k = kd(rng);
    for (int ell : {0, 1, 3, 7}) {
      const CMatrix plus = m_matrix(cfg, ell, k, BoundarySide::Plus);
      const CMatrix minus = m_matrix(cfg, ell, k, BoundarySide::Minus);
      const CMatrix refl = m_matrix_minus_by_reflection(cfg, ell, k);
      for (std::size_t i = 0; i < cfg.size(); ++i)
        for (std::size_t j = 0; j < cfg.size(); ++j) {
          REQUIRE(minus(i, j) == std::conj(plus(i, j)));
          REQUIRE(std::abs(refl(i, j) - minus(i, j)) <=
                  1e-12 * std::max(1.0, std::abs(minus(i, j))));
        }
    }
  }
}

TEST_CASE("m matrix is symmetric") {
  std::mt19937 rng(303);
  for (int rep = 0; rep < 20; ++rep) {
    const ShellConfig cfg = random_config(rng);
    const CMatrix m = m_matrix(cfg, 2, 1.3, BoundarySide::Plus);
    for (std::size_t i = 0; i < cfg.size(); ++i)
      for (std::size_t j = 0; j < cfg.size(); ++j) REQUIRE(m(i, j) == m(j, i));
  }
}

TEST_CASE("K matrix reduces to identity for zero strengths") {
  const ShellConfig cfg = validate({0.5, 1.5, 2.5}, {0.0, 0.0, 0.0});
  const CMatrix km = k_matrix(cfg, 4, 2.0, BoundarySide::Plus);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) REQUIRE(km(i, j) == cplx(i == j ? 1.0 : 0.0, 0.0));
}

TEST_CASE("single shell K entry") {
  const ShellConfig cfg = validate({1.0}, {1.0});
  const CMatrix km = k_matrix(cfg, 0, 1.0, BoundarySide::Plus);
  REQUIRE(km(0, 0).real() == Approx(1.454649).epsilon(1e-6));
  REQUIRE(km(0, 0).imag() == Approx(0.708073).epsilon(1e-6));
}

TEST_CASE("rank-one jump identity") {
  std::mt19937 rng(571);
  std::uniform_real_distribution<double> kd(0.05, 10.0);
  for (int rep = 0; rep < 50; ++rep) {
    const ShellConfig cfg = random_config(rng);
    const double k = kd(rng);
    for (int ell : {0, 2, 5}) {
      const CMatrix plus = m_matrix(cfg, ell, k, BoundarySide::Plus);
      const CMatrix minus = m_matrix(cfg, ell, k, BoundarySide::Minus);
      const BVector b = b_vector(cfg, ell, k);
      for (std::size_t i = 0; i < cfg.size(); ++i)
        for (std::size_t j = 0; j < cfg.size(); ++j) {
          const cplx jump = minus(i, j) - plus(i, j);
          const cplx expected = cplx(0.0, -2.0 * k) * b.values[i] * b.values[j];
          REQUIRE(std::abs(jump - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
        }
    }
  }
}

TEST_CASE("determinant conjugation and nonvanishing") {
  std::mt19937 rng(733);
  for (int rep = 0; rep < 25; ++rep) {
    const ShellConfig cfg = random_config(rng);
    for (double k = 1e-3; k <= 20.0; k *= 2.3) {
      for (int ell = 0; ell <= 10; ++ell) {
        const CMatrix kp = k_matrix(cfg, ell, k, BoundarySide::Plus);
        const CMatrix km = k_matrix(cfg, ell, k, BoundarySide::Minus);
        const cplx dp = determinant(kp);
        const cplx dm = determinant(km);
        REQUIRE(std::abs(dm - std::conj(dp)) <= 1e-12 * std::max(1.0, std::abs(dp)));
        REQUIRE(std::abs(dp) > 1e-13 * deltashell::detail::det_scale(kp));
      }
    }
  }
}

TEST_CASE("negative energy matrix entries") {
  // N=1 closed form: sinh(kappa r<) e^{-kappa r>} / (kappa r< r>)
  const ShellConfig cfg = validate({1.0}, {1.0});
  const CMatrix m = m_matrix_negative(cfg, 0, 1.0);
  REQUIRE(m(0, 0).real() == Approx(std::sinh(1.0) * std::exp(-1.0)).epsilon(1e-12));
  REQUIRE(m(0, 0).real() == Approx(0.432332).epsilon(1e-5));
  REQUIRE(m(0, 0).imag() == 0.0);
}

TEST_CASE("negative energy matrix is real, symmetric, and decays in kappa") {
  std::mt19937 rng(997);
  for (int rep = 0; rep < 15; ++rep) {
    const ShellConfig cfg = random_config(rng);
    for (int ell : {0, 1, 4}) {
      const CMatrix m = m_matrix_negative(cfg, ell, 0.8);
      for (std::size_t i = 0; i < cfg.size(); ++i)
        for (std::size_t j = 0; j < cfg.size(); ++j) {
          REQUIRE(m(i, j).imag() == 0.0);
          REQUIRE(m(i, j) == m(j, i));
        }
    }
  }
  // monotone decay of the entries for large kappa
  const ShellConfig two = validate({1.0, 2.0}, {1.0, 1.0});
  double prev = std::abs(m_matrix_negative(two, 0, 5.0)(0, 1));
  for (double kappa = 6.0; kappa <= 50.0; kappa += 1.0) {
    const double cur = std::abs(m_matrix_negative(two, 0, kappa)(0, 1));
    REQUIRE(cur < prev);
    prev = cur;
  }
}

TEST_CASE("b vector values") {
  const ShellConfig cfg = validate({1.0, 2.0}, {0.0, 0.0});
  const BVector b = b_vector(cfg, 0, std::numbers::pi);
  REQUIRE(std::abs(b.values[0]) < 1e-15);  // sin(pi)/pi
  REQUIRE(std::abs(b.values[1]) < 1e-15);  // sin(2 pi)/(2 pi)

  const ShellConfig one = validate({1.0}, {0.0});
  REQUIRE(b_vector(one, 0, 1.0).values[0] == Approx(std::sin(1.0)).epsilon(1e-14));

  // j_1(x) ~ x/3 for small x
  for (double k : {1e-4, 1e-5, 1e-6}) {
    const BVector b1 = b_vector(one, 1, k);
    REQUIRE(b1.values[0] == Approx(k / 3.0).epsilon(1e-6));
  }
}
