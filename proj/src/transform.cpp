#include "gammaft/transform.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gammaft/partitions.hpp"

namespace gammaft {

namespace {

constexpr long double kPiL = 3.141592653589793238462643383279503L;
constexpr double kLogDblMax = 709.78;

long double factorial_ld(int m) {
  long double r = 1.0L;
  for (int k = 2; k <= m; ++k) r *= k;
  return r;
}

// log(1 + e^x) without overflow.
long double softplus(long double x) {
  return x > 0.0L ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

// log cosh(x) without overflow.
long double log_cosh(long double x) {
  const long double a = std::fabs(x);
  return a + std::log1p(std::exp(-2.0L * a)) - 0.6931471805599453094172321214581766L;
}

void check_common(int m, double lambda) {
  if (m < 0 || m > kMaxPartitionM)
    throw std::domain_error("transform: m must be in [0, 64]");
  if (!std::isfinite(lambda))
    throw std::domain_error("transform: lambda must be finite");
}

// sum over partitions of m of (-1)^M (beta)_M w_p 2F1(-M, b2; beta; zeta).
// All arithmetic in long double: the alternating sum must cancel exactly for
// odd m at zeta = 1/2, and double precision alone leaves ~1e-11 residue.
long double faa_hyp_sum(int m, long double beta, long double b2,
                        long double zeta) {
  const auto terms = partition_terms(m);
  long double s = 0.0L;
  for (const auto& t : *terms) {
    const long double f = hyp2f1_terminating_ld(t.parts, b2, beta, zeta);
    const long double v = pochhammer_ld(beta, t.parts) * t.weight * f;
    s += (t.parts & 1) ? -v : v;
  }
  return s;
}

// sum over partitions of m of x^M (beta)_M w_p.
long double faa_power_sum(int m, long double beta, long double x) {
  const auto terms = partition_terms(m);
  long double s = 0.0L;
  for (const auto& t : *terms)
    s += std::pow(x, t.parts) * pochhammer_ld(beta, t.parts) * t.weight;
  return s;
}

Complex finish(int m, long double magnitude) {
  const double mag = static_cast<double>(magnitude);
  if (!std::isfinite(mag))
    throw std::overflow_error("transform: result exceeds double range");
  return minus_i_pow(m) * Complex(mag, 0.0);
}

}  // namespace

Complex eval_transform(const TransformParams& p) {
  check_common(p.m, p.lambda);
  if (!(p.alpha > 0.0) || !std::isfinite(p.alpha) || !(p.beta > 0.0) ||
      !std::isfinite(p.beta))
    throw std::domain_error("eval_transform: requires alpha > 0 and beta > 0");
  const long double a = p.alpha, b = p.beta, lam = p.lambda;
  if (log_gamma_pos(a + b) > kLogDblMax)
    throw std::overflow_error("eval_transform: Gamma(alpha+beta) overflows");

  const long double zeta = 1.0L / (1.0L + std::exp(-lam));
  const long double sum = faa_hyp_sum(p.m, b, a + b, zeta);
  const long double log_kernel = lam * b - (a + b) * softplus(lam);
  const long double mag = 2.0L * kPiL * factorial_ld(p.m) *
                          std::exp(log_gamma_pos(a + b) + log_kernel) * sum;
  return finish(p.m, mag);
}

Complex eval_equal_params(double beta, int m, double lambda) {
  check_common(m, lambda);
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw std::domain_error("eval_equal_params: requires beta > 0");
  const long double b = beta, lam = lambda;
  if (log_gamma_pos(b) + log_gamma_pos(b + 0.5L) > kLogDblMax)
    throw std::overflow_error("eval_equal_params: gamma factors overflow");

  const long double zeta = 1.0L / (1.0L + std::exp(-lam));
  const long double sum = faa_hyp_sum(m, b, 2.0L * b, zeta);
  // (2/(1+cosh lambda))^b = exp(-2 b log cosh(lambda/2))
  const long double log_kernel = -2.0L * b * log_cosh(0.5L * lam);
  const long double mag =
      std::sqrt(kPiL) * factorial_ld(m) *
      std::exp(log_gamma_pos(b + 0.5L) + log_gamma_pos(b) + log_kernel) * sum;
  return finish(m, mag);
}

Complex eval_alpha_zero(double beta, int m, double lambda) {
  check_common(m, lambda);
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw std::domain_error("eval_alpha_zero: requires beta > 0");
  const long double b = beta, lam = lambda;
  if (log_gamma_pos(b) > kLogDblMax)
    throw std::overflow_error("eval_alpha_zero: Gamma(beta) overflows");

  if (m == 0 && lambda == 0.0) {
    const long double mag =
        kPiL * std::exp((1.0L - b) * 0.6931471805599453094172321214581766L +
                        log_gamma_pos(b));
    return finish(0, mag);
  }
  if (m == 0) {
    const long double log_zeta = lam - softplus(lam);  // log(e^l/(1+e^l))
    const long double mag =
        2.0L * kPiL * std::exp(b * log_zeta + log_gamma_pos(b));
    return finish(0, mag);
  }
  if (lambda == 0.0) {
    const long double sum = faa_power_sum(m, b, -0.5L);
    const long double mag =
        kPiL * factorial_ld(m) *
        std::exp((1.0L - b) * 0.6931471805599453094172321214581766L +
                 log_gamma_pos(b)) *
        sum;
    return finish(m, mag);
  }
  throw std::domain_error(
      "eval_alpha_zero: closed form exists only for m == 0 or lambda == 0");
}

Complex eval_zero_zero(int m, double lambda) {
  check_common(m, lambda);
  if (m < 1)
    throw std::domain_error("eval_zero_zero: diverges at m = 0 (Gamma(0))");
  // Every partition of m >= 1 has M >= 1, so Gamma(M) = (M-1)! is finite.
  const auto terms = partition_terms(m);
  const long double inv = std::exp(-softplus(static_cast<long double>(lambda)));
  long double sum = 0.0L;
  for (const auto& t : *terms) {
    long double gamma_m = 1.0L;
    for (int k = 2; k < t.parts; ++k) gamma_m *= k;
    const long double v = gamma_m * t.weight * std::pow(inv, t.parts);
    sum += (t.parts & 1) ? -v : v;
  }
  return finish(m, 2.0L * kPiL * factorial_ld(m) * sum);
}

double derivative_kernel(double alpha, double beta, int m, double lambda) {
  check_common(m, lambda);
  if (!(alpha > 0.0) || !std::isfinite(alpha) || !(beta > 0.0) ||
      !std::isfinite(beta))
    throw std::domain_error(
        "derivative_kernel: requires alpha > 0 and beta > 0");
  const long double a = alpha, b = beta, lam = lambda;
  const long double zeta = 1.0L / (1.0L + std::exp(-lam));
  const long double sum = faa_hyp_sum(m, b, a + b, zeta);
  const long double kernel = std::exp(lam * b - (a + b) * softplus(lam));
  long double mag = factorial_ld(m) * kernel * sum;
  if (m & 1) mag = -mag;
  const double out = static_cast<double>(mag);
  if (!std::isfinite(out))
    throw std::overflow_error("derivative_kernel: result exceeds double range");
  return out;
}

}  // namespace gammaft
