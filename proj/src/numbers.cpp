#include "gammaft/numbers.hpp"

#include <stdexcept>

#include "gammaft/partitions.hpp"
#include "gammaft/specfun.hpp"

namespace gammaft {

namespace {

void check_m(int m, int minimum = 0) {
  if (m < minimum) throw std::invalid_argument("numbers: m below domain");
  if (m > kMaxPartitionM)
    throw std::length_error("numbers: m exceeds the partition cap of 64");
}

Rational sign(int k) { return (k & 1) ? Rational(-1) : Rational(1); }

}  // namespace

Rational euler_polynomial(int m, const Rational& beta) {
  check_m(m);
  if (!(beta > 0 && beta < 1))
    throw std::domain_error("euler_polynomial: requires 0 < beta < 1");
  const Rational half(1, 2);
  Rational sum(0);
  for (const auto& p : enumerate_partitions(m)) {
    const Rational f =
        hyp2f1_terminating(p.parts, Rational(1), beta, half);
    sum += sign(p.parts) * pochhammer(beta, p.parts) * faa_weight(p) * f;
  }
  return sign(m) * Rational(factorial(m)) * sum;
}

Rational euler_number(int m) {
  check_m(m);
  const Rational half(1, 2);
  Rational sum(0);
  for (const auto& p : enumerate_partitions(m)) {
    const unsigned long M = static_cast<unsigned long>(p.parts);
    // Gamma(M + 1/2) / sqrt(pi) = (2M)! / (4^M M!)
    Rational gamma_half(factorial(2 * M));
    gamma_half /= rational_pow(Rational(4), p.parts) * Rational(factorial(M));
    const Rational f = hyp2f1_terminating(p.parts, Rational(1), half, half);
    sum += sign(p.parts) * gamma_half * faa_weight(p) * f;
  }
  return rational_pow(Rational(-2), m) * Rational(factorial(m)) * sum;
}

Rational bernoulli_number(int m, BernoulliVariant variant) {
  check_m(m, 1);
  const Rational minus_half(-1, 2);
  Rational sum(0);
  if (variant == BernoulliVariant::eq47) {
    for (const auto& p : enumerate_partitions(m))
      sum += rational_pow(minus_half, p.parts + 1) * Rational(factorial(p.parts)) *
             faa_weight(p);
    Rational pref = sign(m + 1) * Rational(m + 1) * Rational(factorial(m));
    pref /= rational_pow(Rational(2), m + 1) - 1;
    return pref * sum;
  }
  for (const auto& p : enumerate_partitions(m)) {
    // Gamma(M) = (M-1)!, finite because every partition of m >= 1 has M >= 1.
    sum += rational_pow(minus_half, p.parts) *
           Rational(factorial(p.parts - 1)) * faa_weight(p);
  }
  Rational pref = sign(m + 1) * Rational(m) * Rational(factorial(m));
  pref /= rational_pow(Rational(2), m) - 1;
  return pref * sum;
}

Rational monomial_sum(int m, const Rational& beta) {
  check_m(m);
  Rational sum(0);
  for (const auto& p : enumerate_partitions(m))
    sum += sign(p.parts) * pochhammer(beta, p.parts) * faa_weight(p);
  return sign(m) * Rational(factorial(m)) * sum;
}

Rational gamma_residue(int m) {
  check_m(m);
  Rational sum(0);
  for (const auto& p : enumerate_partitions(m))
    sum += sign(p.parts) * Rational(factorial(p.parts)) * faa_weight(p);
  return sum;
}

Rational laguerre_diagonal(int m, const Rational& beta) {
  check_m(m);
  Rational sum(0);
  for (const auto& p : enumerate_partitions(m))
    sum += sign(p.parts) * pochhammer(beta, p.parts) * faa_weight(p);
  return sum;
}

}  // namespace gammaft
