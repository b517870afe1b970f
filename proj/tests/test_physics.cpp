#include <cmath>
#include <complex>

#include "doctest.h"
#include "gammaft/oracle.hpp"
#include "gammaft/physics.hpp"
#include "gammaft/specfun.hpp"

using namespace gammaft;

namespace {

constexpr double kPi = 3.14159265358979323846;

double rel(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s > 0 ? std::abs(a - b) / s : 0.0;
}

}  // namespace

TEST_CASE("expansion coefficients") {
  CHECK(gamma_coefficient(0, 0.0, 0, 0) ==
        doctest::Approx(2.0 / std::sqrt(kPi)).epsilon(1e-14));
  CHECK(gamma_coefficient(0, 2.0, 0, 0) ==
        doctest::Approx(1.0 / real_gamma(3.5)).epsilon(1e-13));
  for (int n : {1, 2, 3})
    for (int l1 = 0; l1 <= n; ++l1)
      for (int l2 = 0; l2 <= n; ++l2)
        CHECK(gamma_coefficient(n, 1.0, l1, l2) ==
              doctest::Approx(gamma_coefficient(n, 1.0, l2, l1))
                  .epsilon(1e-14));
  CHECK_THROWS_AS(gamma_coefficient(1, 0.0, 2, 0), std::out_of_range);
}

TEST_CASE("position moments") {
  CHECK(expectation_mu(2, 0, 0.0) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(expectation_mu(1, 0, 0.0) ==
        doctest::Approx(2.0 / std::sqrt(kPi)).epsilon(1e-12));
  CHECK(expectation_mu(2, 0, 5.0) == doctest::Approx(6.5).epsilon(1e-12));
  for (int l : {0, 1, 5, 10})
    CHECK(std::abs(expectation_mu(2, 0, l) - (l + 1.5)) / (l + 1.5) < 1e-10);
  CHECK_THROWS_AS(expectation_mu(3, 0, 0.0), std::invalid_argument);
}

TEST_CASE("momentum moments") {
  const Complex p00 = expectation_pi(0, 0.0);
  CHECK(p00.real() == doctest::Approx(0.0));
  CHECK(p00.imag() ==
        doctest::Approx(1.0 / std::sqrt(kPi)).epsilon(1e-12));
  CHECK(p00.imag() == doctest::Approx(0.5641895835).epsilon(1e-9));

  for (int l : {0, 1, 5, 10, 7})
    CHECK(std::abs(expectation_pi2(0, l) - 1.0) < 1e-10);

  // antisymmetric part of the coefficient sum cancels
  for (int n = 0; n <= 3; ++n) {
    double anti = 0.0;
    for (int l1 = 0; l1 <= n; ++l1)
      for (int l2 = 0; l2 <= n; ++l2)
        anti += gamma_coefficient(n, 1.0, l1, l2) * (l1 - l2) *
                std::exp(static_cast<double>(log_gamma_pos(1.0 + l1 + l2 + 1.0)));
    CHECK(std::abs(anti) < 1e-12);
  }
}

TEST_CASE("moments agree with the kappa-space integrals") {
  for (int n = 0; n <= 3; ++n)
    for (int l : {0, 1, 2})
      for (int q : {1, 2})
        CHECK(rel(expectation_mu(q, n, l), quad_expectation_kappa(n, l, q)) <
              1e-6);
}

TEST_CASE("moments agree with the s-space integrals") {
  for (int n = 0; n <= 2; ++n)
    for (int l : {0, 1}) {
      const Complex pi_closed = expectation_pi(n, l);
      const Complex pi_quad = quad_expectation_s(n, l, SMoment::pi);
      CHECK(std::abs(pi_closed - pi_quad) <=
            1e-6 * std::max(1.0, std::abs(pi_quad)));
      const double pi2_closed = expectation_pi2(n, l);
      const Complex pi2_quad = quad_expectation_s(n, l, SMoment::pi2);
      CHECK(std::abs(Complex(pi2_closed, 0.0) - pi2_quad) <=
            1e-6 * std::max(1.0, std::abs(pi2_quad)));
    }
}

TEST_CASE("distribution values against the direct quadrature") {
  for (const auto& [n, l] : std::initializer_list<std::pair<int, int>>{
           {0, 0}, {1, 0}, {1, 1}, {2, 1}}) {
    for (const auto& [x, p] : std::initializer_list<std::pair<double, double>>{
             {0.5, 0.0}, {0.3, 0.7}, {1.1, 1.5}}) {
      const double closed = wigner(QuantumIndices{n, double(l), 1.0}, x, p);
      const double direct = quad_wigner(n, l, 1.0, x, p);
      CHECK(rel(closed, direct) < 1e-6);
    }
  }
  // and at a different well width
  CHECK(rel(wigner(QuantumIndices{0, 0.0, 2.0}, 0.4, 0.6),
            quad_wigner(0, 0, 2.0, 0.4, 0.6)) < 1e-6);
}

TEST_CASE("distribution is even in p and in x") {
  const QuantumIndices idx{1, 1.0, 1.0};
  CHECK(wigner(idx, 0.7, 0.9) ==
        doctest::Approx(wigner(idx, 0.7, -0.9)).epsilon(1e-13));
  CHECK(wigner(idx, -0.7, 0.9) ==
        doctest::Approx(wigner(idx, 0.7, 0.9)).epsilon(1e-15));
}

TEST_CASE("distribution guards") {
  CHECK_THROWS_AS(wigner(QuantumIndices{0, 0.0, 1.0}, 0.0, 50.0),
                  std::domain_error);
  CHECK_THROWS_AS(wigner(QuantumIndices{0, -1.5, 1.0}, 0.0, 0.0),
                  std::domain_error);
  CHECK_THROWS_AS(wigner(QuantumIndices{0, 0.0, 0.0}, 0.0, 0.0),
                  std::domain_error);
}

TEST_CASE("uncertainty product") {
  const double expected =
      std::sqrt((1.5 - 4.0 / kPi) * (1.0 + 1.0 / kPi));
  CHECK(uncertainty_product(0, 0.0) ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(uncertainty_product(0, 0.0) ==
        doctest::Approx(0.5467546).epsilon(1e-6));
  for (int l = 0; l <= 20; ++l) {
    const double up = uncertainty_product(0, l);
    CHECK(up > 0.5);
    CHECK(up < 0.75);
  }
  // approach to n + 1/2 from above as l grows
  double prev = uncertainty_product(0, 1.0);
  for (double l : {10.0, 100.0, 1000.0}) {
    const double cur = uncertainty_product(0, l);
    CHECK(cur < prev);
    prev = cur;
  }
  for (int n : {0, 1, 2})
    CHECK(std::abs(uncertainty_product(n, 1000.0) - (n + 0.5)) / (n + 0.5) <
          0.02);
}

TEST_CASE("momentum symbols") {
  const Complex at_zero = weyl_transform_pi(2, 1.3, 0.0, 1.0);
  CHECK(at_zero.real() == 0.0);
  CHECK(at_zero.imag() == 0.0);

  const Complex q1 = weyl_transform_pi(1, 0.0, 1.0, 2.0);
  CHECK(q1.real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(q1.imag() == doctest::Approx(0.5).epsilon(1e-15));

  CHECK(weyl_transform_mu(2, 0.9, 1.0) ==
        doctest::Approx(4.0 * std::exp(-0.9)).epsilon(1e-14));
  CHECK_THROWS_AS(weyl_transform_pi(3, 0.0, 0.0, 1.0), std::invalid_argument);
}
