#include "gammaft/physics.hpp"

#include <cmath>
#include <stdexcept>

namespace gammaft {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_nl(int n, double l) {
  if (n < 0) throw std::invalid_argument("physics: n must be >= 0");
  if (!(l > -1.5))
    throw std::domain_error("physics: requires l > -3/2");
  // l = -3/2, -5/2, ... are gamma poles; l > -3/2 already excludes them all.
}

// log C(x, k) for x > k - 1 so every factor is positive.
long double log_binom_half(double x, int k) {
  long double acc = 0.0L;
  for (int j = 0; j < k; ++j)
    acc += std::log(static_cast<long double>(x) - j) -
           std::log(static_cast<long double>(j) + 1.0L);
  return acc;
}

double binom_half(double x, int k) {
  double r = 1.0;
  for (int j = 0; j < k; ++j) r *= (x - j) / (j + 1.0);
  return r;
}

long double lg(double x) {
  return log_gamma_pos(static_cast<long double>(x));
}

// log |gamma_{n,l,l1,l2}| (the coefficient is positive up to (-1)^{l1+l2}).
// Kept in extended precision: the (l1, l2) sums cancel terms that grow like
// l^{n+1} down to O(l), so double-rounded logs of size ~3e4 would poison the
// low digits at large l.
long double log_gamma_coefficient(int n, double l, int l1, int l2) {
  return lg(n + 1.0) - lg(n + l + 1.5) + log_binom_half(n + l + 0.5, n - l1) +
         log_binom_half(n + l + 0.5, n - l2) - lg(l1 + 1.0) - lg(l2 + 1.0);
}

double two_branch_mu(double x, double a) {
  return x > 0.0 ? -(2.0 / a) * std::exp(-0.5 * a * x)
                 : (2.0 / a) * std::exp(0.5 * a * x);
}

}  // namespace

void validate_indices(const QuantumIndices& idx) {
  check_nl(idx.n, idx.l);
  if (idx.a == 0.0 || !std::isfinite(idx.a))
    throw std::domain_error("physics: requires a != 0");
}

double gamma_coefficient(int n, double l, int l1, int l2) {
  check_nl(n, l);
  if (l1 < 0 || l1 > n || l2 < 0 || l2 > n)
    throw std::out_of_range("gamma_coefficient: l1, l2 must lie in [0, n]");
  const double mag =
      static_cast<double>(std::exp(log_gamma_coefficient(n, l, l1, l2)));
  return ((l1 + l2) & 1) ? -mag : mag;
}

double wigner_kappa(int n, double l, double a, double kappa, double p) {
  check_nl(n, l);
  if (!(kappa > 0.0)) throw std::domain_error("wigner_kappa: requires kappa > 0");
  const double order_im = -2.0 * p / a;
  if (std::abs(order_im) > 80.0)
    throw std::domain_error("wigner: |2p/a| exceeds the Bessel order guard of 80");

  const double head = std::exp(lg(n + 1.0) - lg(n + l + 1.5));
  Complex sum{0.0, 0.0};
  for (int l1 = 0; l1 <= n; ++l1) {
    for (int l2 = 0; l2 <= n; ++l2) {
      double c = binom_half(n + l + 0.5, n - l1) * binom_half(n + l + 0.5, n - l2);
      c /= std::exp(lg(l1 + 1.0) + lg(l2 + 1.0));
      if ((l1 + l2) & 1) c = -c;
      const Complex k =
          bessel_k_complex_order(Complex(l1 - l2, order_im), kappa);
      sum += c * std::pow(kappa, l + l1 + l2 + 1.5) * k;
    }
  }
  const Complex value = (2.0 / kPi) * head * sum;
  if (std::abs(value.imag()) > 1e-10)
    throw std::runtime_error("wigner: imaginary part failed to cancel below 1e-10");
  return value.real();
}

double wigner(const QuantumIndices& idx, double x, double p) {
  validate_indices(idx);
  if (!std::isfinite(x) || !std::isfinite(p))
    throw std::domain_error("wigner: x and p must be finite");
  const double kappa =
      (4.0 / (idx.a * idx.a)) * std::exp(-idx.a * std::abs(x));
  return wigner_kappa(idx.n, idx.l, idx.a, kappa, p);
}

double expectation_mu(int q, int n, double l) {
  if (q != 1 && q != 2)
    throw std::invalid_argument("expectation_mu: q must be 1 or 2");
  check_nl(n, l);
  long double sum = 0.0L;
  for (int l1 = 0; l1 <= n; ++l1) {
    for (int l2 = 0; l2 <= n; ++l2) {
      const long double t = std::exp(log_gamma_coefficient(n, l, l1, l2) +
                                     lg(l + l1 + l2 + 0.5 * (q + 3)));
      sum += ((l1 + l2) & 1) ? -t : t;
    }
  }
  return static_cast<double>(sum);
}

Complex expectation_pi(int n, double l) {
  check_nl(n, l);
  long double sum = 0.0L;
  for (int l1 = 0; l1 <= n; ++l1) {
    for (int l2 = 0; l2 <= n; ++l2) {
      long double t = (static_cast<long double>(l1) - l2 - 0.5L) *
                      std::exp(log_gamma_coefficient(n, l, l1, l2) +
                               lg(l + l1 + l2 + 1.0));
      if ((l1 + l2) & 1) t = -t;
      sum += t;
    }
  }
  return Complex(0.0, static_cast<double>(-sum));
}

double expectation_pi2(int n, double l) {
  check_nl(n, l);
  long double sum = 0.0L;
  for (int l1 = 0; l1 <= n; ++l1) {
    for (int l2 = 0; l2 <= n; ++l2) {
      const long double poly = static_cast<long double>(l) + 0.5L -
                               static_cast<long double>(l1) * l1 -
                               static_cast<long double>(l2) * l2 +
                               2.0L * l1 * l2 + 2.0L * l1;
      long double t = poly * std::exp(log_gamma_coefficient(n, l, l1, l2) +
                                      lg(l + l1 + l2 + 0.5));
      if ((l1 + l2) & 1) t = -t;
      sum += t;
    }
  }
  return static_cast<double>(sum);
}

double uncertainty_product(int n, double l) {
  const double mu1 = expectation_mu(1, n, l);
  const double mu2 = expectation_mu(2, n, l);
  const Complex pi1 = expectation_pi(n, l);
  const double pi2 = expectation_pi2(n, l);

  const double rad_mu = mu2 - mu1 * mu1;
  const double rad_pi = pi2 - (pi1 * pi1).real();  // = pi2 + |<pi>|^2
  if (rad_mu < 0.0 || rad_pi < 0.0)
    throw std::runtime_error("uncertainty_product: negative radicand");
  return std::sqrt(rad_mu) * std::sqrt(rad_pi);
}

Complex weyl_transform_pi(int q, double x, double p, double a) {
  if (q != 1 && q != 2)
    throw std::invalid_argument("weyl_transform_pi: q must be 1 or 2");
  if (a == 0.0 || !std::isfinite(x))
    throw std::domain_error("weyl_transform_pi: requires a != 0 and finite x");
  const double mu = two_branch_mu(x, a);
  if (q == 1) return Complex((2.0 / a) * p / mu, 0.5 / mu);
  const double mu2 = mu * mu;
  return Complex((4.0 / (a * a)) * p * p / mu2, (2.0 / a) * p / mu2);
}

double weyl_transform_mu(int q, double x, double a) {
  if (q < 0) throw std::invalid_argument("weyl_transform_mu: q must be >= 0");
  if (a == 0.0 || !std::isfinite(x))
    throw std::domain_error("weyl_transform_mu: requires a != 0 and finite x");
  return std::pow(two_branch_mu(x, a), q);
}

}  // namespace gammaft
