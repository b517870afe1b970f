#pragma once

#include <vector>

#include "gammaft/specfun.hpp"
#include "gammaft/transform.hpp"

namespace gammaft {

// Brute-force evaluators used only for verification. They never share a code
// path with the closed forms they check.

struct QuadratureSpec {
  double truncation = 0.0;  // half-width S of the s-interval; 0 = from envelope
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 4000;  // panel cap before giving up
  bool parallel = true;         // OpenMP over panels; false = serial reference
};

struct QuadResult {
  Complex value{0.0, 0.0};
  double error_estimate = 0.0;  // achieved absolute tolerance
  int panels = 0;
  bool converged = false;
};

// Adaptive Gauss-Kronrod quadrature of e^{-i lambda s} s^m G(a-is) G(b+is)
// over [-S, S]. S solves 2 pi S^{a+b-1} e^{-pi S} < abs_tol (min 40).
// alpha = 0 is admitted when m >= 1: s^m G(-is) is regular at s = 0 and the
// integral equals the alpha -> 0+ limit. Throws on non-convergence.
QuadResult quad_transform(const TransformParams& p,
                          const QuadratureSpec& spec = {});

// Sequential boundary limit: quadrature at alpha = 0 exactly, beta = eps for
// each rung of the (decreasing, positive) ladder, then polynomial
// extrapolation of beta -> 0+. Oracle for eval_zero_zero.
Complex quad_transform_limit(int m, double lambda,
                             const std::vector<double>& eps_ladder = {1e-2,
                                                                      1e-3,
                                                                      1e-4},
                             const QuadratureSpec& spec = {});

// Direct phase-space distribution
//   (1/2pi) integral e^{-i p y} psi(x - y/2) psi(x + y/2) dy
// for the bound eigenfunctions (unit-normalized, single-branch profile; see
// oracle.cpp). Asserts the imaginary residue stays below 1e-10 and returns
// the real part.
double quad_wigner(int n, int l, double a, double x, double p);

// [n!/Gamma(n+l+3/2)] integral_0^inf k^{l+(q+1)/2} e^{-k} [L_n^{(l+1/2)}(k)]^2 dk
// by high-order fixed quadrature after the smoothing substitution k = u^2.
double quad_expectation_kappa(int n, int l, int q);

// Which momentum moment the s-space oracle assembles.
enum class SMoment { pi, pi2 };

// The double sums over (l1, l2) with every inner s-integral evaluated by
// quad_transform at lambda = 0, m in {0, 1, 2}. Independent oracle for the
// closed-form expectation values.
Complex quad_expectation_s(int n, int l, SMoment which);

}  // namespace gammaft
