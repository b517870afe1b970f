#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "gammaft/partitions.hpp"
#include "gammaft/specfun.hpp"
#include "gammaft/transform.hpp"

using namespace gammaft;

namespace {

constexpr double kPi = 3.14159265358979323846;

double rel(Complex a, Complex b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s > 0 ? std::abs(a - b) / s : 0.0;
}

// Convergent-series route for lambda < 0 (the hypergeometric argument is
// -e^lambda inside the unit disc), kept independent of the library's
// terminating-series path.
double hyp2f1_series(double A, double B, double C, double z) {
  double term = 1.0, sum = 1.0;
  for (int k = 0; k < 100000; ++k) {
    term *= (A + k) * (B + k) * z / ((C + k) * (k + 1));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) return sum;
  }
  FAIL("series did not converge");
  return sum;
}

Complex untransformed_route(double alpha, double beta, int m, double lambda) {
  REQUIRE(lambda < 0.0);
  const double big_lambda = std::exp(lambda);
  double sum = 0.0;
  for (const auto& p : enumerate_partitions(m)) {
    const double f =
        hyp2f1_series(beta + p.parts, alpha + beta, beta, -big_lambda);
    double t = pochhammer(beta, p.parts) * to_double(faa_weight(p)) * f;
    if (p.parts & 1) t = -t;
    sum += t;
  }
  double fact = 1.0;
  for (int k = 2; k <= m; ++k) fact *= k;
  const double mag = 2.0 * kPi * fact * real_gamma(alpha + beta) *
                     std::pow(big_lambda, beta) * sum;
  return minus_i_pow(m) * Complex(mag, 0.0);
}

}  // namespace

TEST_CASE("printed anchor values") {
  CHECK(eval_transform({1.0, 1.0, 0, 0.0}).real() ==
        doctest::Approx(kPi / 2.0).epsilon(1e-14));
  CHECK(eval_transform({0.5, 0.5, 4, 0.0}).real() ==
        doctest::Approx(5.0 * kPi / 16.0).epsilon(1e-14));
  // m = 0 closed form: 2 pi Gamma(a+b) e^{l b} / (1+e^l)^{a+b}
  CHECK(eval_transform({1.0, 2.0, 0, 0.0}).real() ==
        doctest::Approx(kPi / 2.0).epsilon(1e-14));
  for (double a : {0.4, 1.1})
    for (double b : {0.8, 2.3})
      for (double lam : {-1.0, 0.0, 1.5}) {
        const double expected = 2.0 * kPi * real_gamma(a + b) *
                                std::exp(lam * b) /
                                std::pow(1.0 + std::exp(lam), a + b);
        CHECK(eval_transform({a, b, 0, lam}).real() ==
              doctest::Approx(expected).epsilon(1e-13));
      }
}

TEST_CASE("equal-parameter closed forms") {
  for (double b : {0.5, 1.0, 2.0})
    for (double lam : {-1.2, 0.0, 0.9}) {
      const double expected = kPi * std::pow(2.0, 1.0 - b) *
                              std::pow(1.0 + std::cosh(lam), -b) *
                              real_gamma(2.0 * b);
      CHECK(eval_equal_params(b, 0, lam).real() ==
            doctest::Approx(expected).epsilon(1e-13));
    }
  for (double b : {0.5, 1.0, 2.0})
    CHECK(eval_equal_params(b, 0, 0.0).real() ==
          doctest::Approx(kPi * std::pow(2.0, 1.0 - 2.0 * b) *
                          real_gamma(2.0 * b))
              .epsilon(1e-13));
  // integral of s^2 pi / cosh(pi s) over the line
  CHECK(eval_equal_params(0.5, 2, 0.0).real() ==
        doctest::Approx(kPi / 4.0).epsilon(1e-13));
}

TEST_CASE("equal-parameter route equals the general closed form") {
  for (double b : {0.3, 0.8, 1.5, 2.5})
    for (int m : {0, 1, 2, 4, 6})
      for (double lam : {-1.5, 0.0, 0.4, 2.0}) {
        const Complex lhs = eval_equal_params(b, m, lam);
        const Complex rhs = eval_transform({b, b, m, lam});
        const double scale = std::max(std::abs(lhs), std::abs(rhs));
        if (scale > 1e-12) CHECK(std::abs(lhs - rhs) / scale < 1e-12);
      }
}

TEST_CASE("alpha -> 0 boundary forms") {
  CHECK(eval_alpha_zero(1.0, 0, 0.0).real() ==
        doctest::Approx(kPi).epsilon(1e-14));
  for (double b : {0.5, 1.3, 2.4})
    for (double lam : {-0.7, 0.0, 1.1}) {
      const double zeta = std::exp(lam) / (1.0 + std::exp(lam));
      CHECK(eval_alpha_zero(b, 0, lam).real() ==
            doctest::Approx(2.0 * kPi * std::pow(zeta, b) * real_gamma(b))
                .epsilon(1e-13));
    }
  CHECK_THROWS_AS(eval_alpha_zero(0.0, 1, 0.0), std::domain_error);
  CHECK_THROWS_AS(eval_alpha_zero(1.0, 2, 0.5), std::domain_error);
}

TEST_CASE("alpha = beta = 0 boundary forms") {
  CHECK(eval_zero_zero(2, 0.0).real() == doctest::Approx(kPi / 2.0).epsilon(1e-14));
  const Complex f1 = eval_zero_zero(1, 0.0);
  CHECK(f1.real() == doctest::Approx(0.0));
  CHECK(f1.imag() == doctest::Approx(kPi).epsilon(1e-14));
  CHECK_THROWS_AS(eval_zero_zero(0, 0.0), std::domain_error);
}

TEST_CASE("derivative kernel") {
  for (double a : {0.5, 1.2})
    for (double b : {0.5, 2.0})
      for (double lam : {-0.8, 0.0, 1.4}) {
        const double expected =
            std::exp(lam * b) / std::pow(1.0 + std::exp(lam), a + b);
        CHECK(derivative_kernel(a, b, 0, lam) ==
              doctest::Approx(expected).epsilon(1e-14));
      }
  // first derivative vs central difference of the m = 0 kernel
  const double h = 1e-5;
  const double fd = (derivative_kernel(0.5, 0.5, 0, h) -
                     derivative_kernel(0.5, 0.5, 0, -h)) /
                    (2.0 * h);
  CHECK(std::abs(derivative_kernel(0.5, 0.5, 1, 0.0) - fd) < 1e-8);
  // alpha + beta = 1, m = 2, lambda = 0: half the classical E_2(1/2)
  CHECK(derivative_kernel(0.5, 0.5, 2, 0.0) ==
        doctest::Approx(-0.125).epsilon(1e-13));
}

TEST_CASE("result is (-i)^m times a real number") {
  for (double a : {0.4, 1.7})
    for (double b : {0.9, 2.2})
      for (int m : {0, 1, 2, 3, 4, 5})
        for (double lam : {-1.1, 0.3}) {
          const Complex v = eval_transform({a, b, m, lam});
          const Complex rotated = v * std::conj(minus_i_pow(m));
          if (std::abs(rotated) > 0)
            CHECK(std::abs(rotated.imag()) <= 1e-12 * std::abs(rotated));
        }
}

TEST_CASE("swap reflection under s -> -s") {
  std::mt19937 rng(99u);
  std::uniform_real_distribution<double> ab(0.3, 2.8);
  std::uniform_real_distribution<double> lam(-2.5, 2.5);
  std::uniform_int_distribution<int> md(0, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const double a = ab(rng), b = ab(rng), l = lam(rng);
    const int m = md(rng);
    const Complex lhs = eval_transform({a, b, m, l});
    Complex rhs = eval_transform({b, a, m, -l});
    if (m & 1) rhs = -rhs;
    CHECK(rel(lhs, rhs) < 1e-10);
  }
}

TEST_CASE("contiguous parameter recurrences") {
  for (double a : {0.4, 0.9, 1.6})
    for (double b : {0.5, 1.3, 2.1})
      for (int m : {0, 1, 2, 3})
        for (double lam : {-1.0, 0.0, 0.8, 2.0}) {
          const Complex fm = eval_transform({a, b, m, lam});
          const Complex fm1 = eval_transform({a, b, m + 1, lam});
          const Complex i{0.0, 1.0};
          CHECK(rel(eval_transform({a + 1.0, b, m, lam}), a * fm - i * fm1) <
                1e-9);
          CHECK(rel(eval_transform({a, b + 1.0, m, lam}), b * fm + i * fm1) <
                1e-9);
        }
}

TEST_CASE("differentiating in lambda lowers to the next monomial") {
  const double h = 1e-5;
  for (double a : {0.5, 1.2, 2.0})
    for (double b : {0.7, 1.5})
      for (double lam : {-1.0, 0.0, 0.6, 1.8}) {
        const Complex fd =
            (eval_transform({a, b, 0, lam + h}) -
             eval_transform({a, b, 0, lam - h})) /
            (2.0 * h);
        const Complex rhs =
            Complex(0.0, -1.0) * eval_transform({a, b, 1, lam});
        CHECK(rel(fd, rhs) < 1e-6);
      }
}

TEST_CASE("odd monomials vanish on the diagonal at lambda = 0") {
  for (double b : {0.3, 0.5, 1.0, 1.7, 2.5})
    for (int m : {1, 3, 5})
      CHECK(std::abs(eval_transform({b, b, m, 0.0})) < 1e-12);
}

TEST_CASE("both hypergeometric routes agree for lambda < 0") {
  for (double a : {0.5, 1.3})
    for (double b : {0.4, 1.1})
      for (int m : {0, 1, 2, 3, 4})
        for (double lam : {-0.5, -1.0, -2.0, -4.0})
          CHECK(rel(eval_transform({a, b, m, lam}),
                    untransformed_route(a, b, m, lam)) < 1e-10);
}

TEST_CASE("domain and overflow guards") {
  CHECK_THROWS_AS(eval_transform({-1.0, 1.0, 0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(eval_transform({1.0, 0.0, 0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(eval_transform({1.0, 1.0, 65, 0.0}), std::domain_error);
  CHECK_THROWS_AS(eval_transform({1.0, 1.0, -1, 0.0}), std::domain_error);
  CHECK_THROWS_AS(eval_transform({100.0, 100.0, 0, 0.0}), std::overflow_error);
  CHECK_THROWS_AS(eval_equal_params(-0.5, 0, 0.0), std::domain_error);
  const double nan = std::nan("");
  CHECK_THROWS_AS(eval_transform({1.0, 1.0, 0, nan}), std::domain_error);
}

TEST_CASE("extreme lambda stays finite") {
  const Complex far = eval_transform({0.5, 0.5, 0, 800.0});
  CHECK(std::isfinite(far.real()));
  CHECK(std::abs(far) < 1e-80);
  const Complex near = eval_transform({0.5, 0.5, 2, -750.0});
  CHECK(std::isfinite(near.real()));
}
