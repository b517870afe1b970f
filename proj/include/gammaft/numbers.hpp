#pragma once

#include "gammaft/rational.hpp"

namespace gammaft {

// Exact partition-sum representations of classical number-theoretic objects.
// Everything here is big-rational arithmetic; no floating point anywhere.

// Euler polynomial E_m(beta) for 0 < beta < 1:
//   (-1)^m m! sum_M (-1)^M (beta)_M w 2F1(-M, 1; beta; 1/2).
Rational euler_polynomial(int m, const Rational& beta);

// Euler number E_m via the beta = 1/2 sum, with Gamma(M + 1/2) rationalized
// to sqrt(pi) (2M)! / (4^M M!) so the result is an exact integer:
//   (-2)^m m! sum_M (-1)^M (2M)!/(4^M M!) w 2F1(-M, 1; 1/2; 1/2).
Rational euler_number(int m);

// Two printed Bernoulli forms: eq47 maps partitions of m to B_{m+1}, eq48
// maps partitions of m to B_m (the B_1 = -1/2 convention).
enum class BernoulliVariant { eq47, eq48 };
Rational bernoulli_number(int m, BernoulliVariant variant);

// (-1)^m m! sum_M (-1)^M (beta)_M w; equals beta^m for beta != -m.
Rational monomial_sum(int m, const Rational& beta);

// sum_M (-1)^M M! w; equals the gamma residue (-1)^m / m!.
Rational gamma_residue(int m);

// sum_M (-1)^M (beta)_M w; equals L_m^{(-m)}(beta) = (-1)^m beta^m / m!.
Rational laguerre_diagonal(int m, const Rational& beta);

}  // namespace gammaft
