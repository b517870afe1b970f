#pragma once

#include "gammaft/specfun.hpp"

namespace gammaft {

// Parameters of F_m^{(alpha,beta)}(lambda)
//   = integral e^{-i lambda s} s^m Gamma(alpha - i s) Gamma(beta + i s) ds.
// The closed form requires alpha > 0 and beta > 0; the alpha = 0 and
// alpha = beta = 0 boundaries are reachable only through the dedicated limit
// evaluators below, never by stretching eval_transform's domain.
struct TransformParams {
  double alpha = 1.0;
  double beta = 1.0;
  int m = 0;
  double lambda = 0.0;
};

// Closed-form evaluation: 2 pi (-i)^m m! Gamma(a+b) L^b/(1+L)^{a+b} times the
// partition sum of (-1)^M (b)_M / prod(i! (nu!)^i) * 2F1(-M, a+b; b; L/(1+L)),
// with L = e^lambda. The result is (-i)^m times a real number.
Complex eval_transform(const TransformParams& p);

// alpha = beta specialization through the duplication formula:
// sqrt(pi) (-i)^m m! (2/(1+cosh lambda))^b Gamma(b+1/2) times the partition
// sum with 2F1(-M, 2b; b; .). Identical to eval_transform(b, b, m, lambda).
Complex eval_equal_params(double beta, int m, double lambda);

// alpha -> 0+ boundary, the three printed closed forms:
//   lambda = 0:        pi (-i)^m m! 2^{1-b} sum (-1/2)^M Gamma(b+M) w
//   m = 0:             2 pi (e^l/(1+e^l))^b Gamma(b)
//   m = 0, lambda = 0: pi 2^{1-b} Gamma(b)
// Rejects m > 0 with lambda != 0 (no printed form for that combination).
Complex eval_alpha_zero(double beta, int m, double lambda);

// alpha -> 0+ then beta -> 0+ boundary (m >= 1; diverges at m = 0):
//   2 pi (-i)^m m! sum (-1)^M Gamma(M) w (1+e^lambda)^{-M}.
Complex eval_zero_zero(int m, double lambda);

// d^m/dlambda^m [ e^{lambda b} / (1+e^lambda)^{a+b} ], real-valued:
//   (-1)^m m! e^{lambda b}/(1+e^lambda)^{a+b} sum (-1)^M (b)_M w 2F1(...).
double derivative_kernel(double alpha, double beta, int m, double lambda);

// (-i)^m as an exact unit.
inline Complex minus_i_pow(int m) {
  switch (m & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}

}  // namespace gammaft
