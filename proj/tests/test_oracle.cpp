#include <cmath>
#include <complex>
#include <cstring>

#include "doctest.h"
#include "gammaft/oracle.hpp"
#include "gammaft/physics.hpp"
#include "gammaft/transform.hpp"

using namespace gammaft;

namespace {

constexpr double kPi = 3.14159265358979323846;

double rel(Complex a, Complex b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s > 0 ? std::abs(a - b) / s : 0.0;
}

}  // namespace

TEST_CASE("direct quadrature reproduces the printed values") {
  CHECK(std::abs(quad_transform({1.0, 1.0, 0, 0.0}).value.real() - kPi / 2.0) <
        1e-10);
  CHECK(std::abs(quad_transform({0.5, 0.5, 4, 0.0}).value.real() -
                 5.0 * kPi / 16.0) < 1e-9);
  for (int m : {1, 3})
    CHECK(std::abs(quad_transform({0.9, 0.9, m, 0.0}).value) < 1e-11);
}

TEST_CASE("quadrature vs closed form on a small sample") {
  for (double a : {0.3, 1.0, 2.5})
    for (double b : {0.5, 1.7})
      for (int m : {0, 2, 5})
        for (double lam : {-2.0, 0.7}) {
          const Complex q = quad_transform({a, b, m, lam}).value;
          const Complex c = eval_transform({a, b, m, lam});
          CHECK(rel(q, c) < 1e-8);
        }
}

TEST_CASE("halving the tolerance moves the value by less than the old one") {
  for (double lam : {0.0, 1.3}) {
    QuadratureSpec loose;
    loose.rel_tol = 1e-8;
    loose.abs_tol = 1e-10;
    const QuadResult first = quad_transform({0.7, 1.4, 2, lam}, loose);
    QuadratureSpec tight = loose;
    tight.rel_tol = 5e-9;
    tight.abs_tol = 5e-11;
    const QuadResult second = quad_transform({0.7, 1.4, 2, lam}, tight);
    CHECK(std::abs(first.value - second.value) <=
          std::max(first.error_estimate,
                   loose.rel_tol * std::abs(first.value)));
    CHECK(first.converged);
    CHECK(second.converged);
  }
}

TEST_CASE("serial and parallel panel evaluation are bitwise identical") {
  QuadratureSpec serial;
  serial.parallel = false;
  QuadratureSpec parallel;
  parallel.parallel = true;
  for (double lam : {-2.0, 0.0, 2.0}) {
    const QuadResult s = quad_transform({0.6, 1.2, 3, lam}, serial);
    const QuadResult p = quad_transform({0.6, 1.2, 3, lam}, parallel);
    CHECK(std::memcmp(&s.value, &p.value, sizeof(Complex)) == 0);
    CHECK(s.panels == p.panels);
  }
}

TEST_CASE("subdivision cap raises the documented error") {
  QuadratureSpec strangled;
  strangled.max_subdivisions = 4;
  strangled.rel_tol = 1e-14;
  strangled.abs_tol = 1e-15;
  CHECK_THROWS_AS(quad_transform({0.3, 0.3, 6, 2.0}, strangled),
                  std::runtime_error);
}

TEST_CASE("boundary limit ladder") {
  const Complex m2 = quad_transform_limit(2, 0.0);
  CHECK(std::abs(m2.real() - kPi / 2.0) < 1e-6);
  CHECK(std::abs(m2.imag()) < 1e-6);

  const Complex m1 = quad_transform_limit(1, 0.0);
  CHECK(std::abs(m1.imag() - kPi) < 1e-6);
  CHECK(std::abs(m1.real()) < 1e-6);

  const Complex m4 = quad_transform_limit(4, 0.0);
  CHECK(rel(m4, eval_zero_zero(4, 0.0)) < 1e-6);

  const Complex shifted = quad_transform_limit(2, 1.0);
  CHECK(rel(shifted, eval_zero_zero(2, 1.0)) < 1e-6);

  CHECK_THROWS_AS(quad_transform_limit(0, 0.0), std::domain_error);
  CHECK_THROWS_AS(quad_transform_limit(2, 0.0, {1e-3, 1e-2}),
                  std::invalid_argument);
}

TEST_CASE("alpha = 0 quadrature matches the printed boundary form") {
  // integrand s^m Gamma(-is) Gamma(b+is) is regular at s = 0 for m >= 1
  for (double b : {0.8, 2.0})
    for (int m : {1, 2, 3}) {
      const Complex q = quad_transform({0.0, b, m, 0.0}).value;
      const Complex c = eval_alpha_zero(b, m, 0.0);
      CHECK(rel(q, c) < 1e-8);
    }
  CHECK_THROWS_AS(quad_transform({0.0, 1.0, 0, 0.0}), std::domain_error);
}

TEST_CASE("bound eigenfunctions are unit-normalized") {
  // quad_wigner at p = 0 integrated over x equals the norm; cheaper and
  // sharper: integrate psi^2 through the distribution's marginal identity
  // integral dx integral dp W = 1 is covered by the physics suite, so here
  // just check the p = 0 slice is positive and finite at a few points.
  for (double x : {0.1, 0.7, 1.9}) {
    const double w = quad_wigner(0, 0, 1.0, x, 0.0);
    CHECK(std::isfinite(w));
    CHECK(w > 0.0);
  }
}

TEST_CASE("direct distribution quadrature is even in p") {
  const double plus = quad_wigner(0, 0, 1.0, 0.4, 0.9);
  const double minus = quad_wigner(0, 0, 1.0, 0.4, -0.9);
  CHECK(plus == doctest::Approx(minus).epsilon(1e-12));
}

TEST_CASE("kappa-space moment integrals") {
  CHECK(quad_expectation_kappa(0, 0, 2) == doctest::Approx(1.5).epsilon(1e-10));
  CHECK(quad_expectation_kappa(0, 0, 1) ==
        doctest::Approx(2.0 / std::sqrt(kPi)).epsilon(1e-10));
  CHECK(quad_expectation_kappa(0, 0, 1) ==
        doctest::Approx(1.1283791671).epsilon(1e-9));
  for (int l : {1, 5})
    CHECK(quad_expectation_kappa(0, l, 2) ==
          doctest::Approx(l + 1.5).epsilon(1e-10));
}

TEST_CASE("s-space moment assembly") {
  const Complex pi2 = quad_expectation_s(0, 0, SMoment::pi2);
  CHECK(std::abs(pi2.real() - 1.0) < 1e-8);
  CHECK(std::abs(pi2.imag()) < 1e-8);

  const Complex pi1 = quad_expectation_s(0, 0, SMoment::pi);
  CHECK(std::abs(pi1.imag() - 1.0 / std::sqrt(kPi)) < 1e-8);
  CHECK(std::abs(pi1.real()) < 1e-8);

  const Complex pi2_exc = quad_expectation_s(1, 0, SMoment::pi2);
  CHECK(std::abs(pi2_exc.real() - expectation_pi2(1, 0.0)) < 1e-7);
}
