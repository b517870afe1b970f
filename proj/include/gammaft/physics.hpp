#pragma once

#include "gammaft/specfun.hpp"

namespace gammaft {

// Bound-state indices for the exponentially decaying mass profile
// m(x) = e^{-a|x|}: principal number n >= 0, angular parameter l (real,
// admissible when l + 3/2 is not a non-positive half-integer pole), inverse
// well width a != 0.
struct QuantumIndices {
  int n = 0;
  double l = 0.0;
  double a = 1.0;
};

void validate_indices(const QuantumIndices& idx);

// gamma_{n,l,l1,l2} =
//   [n!/Gamma(n+l+3/2)] (-1)^{l1+l2}/(l1! l2!) C(n+l+1/2, n-l1) C(n+l+1/2, n-l2)
// with C(x, k) the falling-factorial binomial for half-integer upper index.
double gamma_coefficient(int n, double l, int l1, int l2);

// Phase-space distribution: the closed double sum with kappa = (4/a^2)
// e^{-a|x|} and Bessel order l1 - l2 - 2ip/a. The imaginary part must cancel
// below 1e-10 (checked); returns the real part. Guarded to |2p/a| <= 80.
double wigner(const QuantumIndices& idx, double x, double p);

// Same sum as a function of kappa directly (kappa > 0); wigner() evaluates it
// at the even-in-x profile, the phase-space reconstruction test at the
// single-branch profile kappa = (4/a^2) e^{-a x}.
double wigner_kappa(int n, double l, double a, double kappa, double p);

// <mu^q> = sum gamma * Gamma(l+l1+l2+(q+3)/2), q in {1, 2}. Terms assembled
// in log space so large l cannot overflow.
double expectation_mu(int q, int n, double l);

// <pi> = -i sum gamma (l1 - l2 - 1/2) Gamma(l+l1+l2+1); purely imaginary.
Complex expectation_pi(int n, double l);

// <pi^2> = sum gamma (l + 1/2 - l1^2 - l2^2 + 2 l1 l2 + 2 l1)
//          Gamma(l+l1+l2+1/2).
double expectation_pi2(int n, double l);

// Delta mu * Delta pi with Delta Theta = sqrt(<Theta^2> - <Theta>^2); the
// <pi>^2 term is the complex square, so the pi radicand is <pi^2> + |<pi>|^2.
// Throws on a negative radicand instead of clamping.
double uncertainty_product(int n, double l);

// Phase-space symbols of the momentum-type operator:
//   q = 1: (2/a) mu^{-1}(x) p + (i/2) mu^{-1}(x)
//   q = 2: (4/a^2) mu^{-2}(x) p^2 + (2i/a) mu^{-2}(x) p
// with the two-branch profile mu(x) (mu(0) taken as +2/a).
Complex weyl_transform_pi(int q, double x, double p, double a);

// Trivial companion: the position symbol mu^q(x).
double weyl_transform_mu(int q, double x, double a);

}  // namespace gammaft
