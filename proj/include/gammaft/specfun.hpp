#pragma once

#include <complex>

#include "gammaft/rational.hpp"

namespace gammaft {

using Complex = std::complex<double>;

// Gamma function on the complex plane (Lanczos approximation, one recurrence
// step for 0 < Re z < 1/2, reflection for Re z <= 0). Good to ~13 significant
// digits on |Re z| <= 40, |Im z| <= 60. Throws std::domain_error at the poles
// z = 0, -1, -2, ...
Complex complex_gamma(Complex z);

// Real-axis gamma through the same Lanczos core.
double real_gamma(double x);

// log Gamma(x) for x > 0, evaluated in extended precision. Thread-safe
// (unlike lgamma(), which writes the signgam global).
long double log_gamma_pos(long double x);

double pochhammer(double a, int n);
long double pochhammer_ld(long double a, int n);

// Terminating Gauss series sum_{k=0}^{M} (-M)_k (b)_k / (c)_k z^k / k!.
// Throws std::domain_error when c is a non-positive integer hit before
// termination.
double hyp2f1_terminating(int M, double b, double c, double z);
long double hyp2f1_terminating_ld(int M, long double b, long double c,
                                  long double z);
Rational hyp2f1_terminating(int M, const Rational& b, const Rational& c,
                            const Rational& z);

// Generalized Laguerre polynomial L_n^{(a)}(x), three-term recurrence.
double laguerre(int n, double a, double x);

// Modified Bessel function of the third kind with complex order,
//   K_nu(x) = integral_0^inf exp(-x cosh t) cosh(nu t) dt   (x > 0),
// truncated where the envelope exp(-x cosh t + |Re nu| t) falls below
// rel_eps of its peak. Guarded to |Im nu| <= 80.
Complex bessel_k_complex_order(Complex nu, double x, double rel_eps = 1e-18);

}  // namespace gammaft
