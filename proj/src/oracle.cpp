#include "gammaft/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gammaft/parallel.hpp"
#include "quad_nodes.hpp"

namespace gammaft {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Panel {
  double lo = 0.0, hi = 0.0;
  Complex val{0.0, 0.0};
  double err = 0.0;
  bool fresh = true;
};

template <class F>
void evaluate_panel(Panel& p, const F& f) {
  using detail::kGk15WG;
  using detail::kGk15WK;
  using detail::kGk15X;
  const double c = 0.5 * (p.lo + p.hi);
  const double h = 0.5 * (p.hi - p.lo);
  const Complex fc = f(c);
  Complex resk = kGk15WK[7] * fc;
  Complex resg = kGk15WG[3] * fc;
  for (int j = 0; j < 3; ++j) {
    const int idx = 2 * j + 1;
    const Complex f1 = f(c - h * kGk15X[idx]);
    const Complex f2 = f(c + h * kGk15X[idx]);
    resg += kGk15WG[j] * (f1 + f2);
    resk += kGk15WK[idx] * (f1 + f2);
  }
  for (int j = 0; j < 4; ++j) {
    const int idx = 2 * j;
    const Complex f1 = f(c - h * kGk15X[idx]);
    const Complex f2 = f(c + h * kGk15X[idx]);
    resk += kGk15WK[idx] * (f1 + f2);
  }
  p.val = resk * h;
  p.err = std::abs(resk - resg) * h;
  p.fresh = false;
}

// Half-width from the Stirling-type bound 2 pi |s|^{a+b-1} e^{-pi |s|}.
double solve_truncation(double apb, double tol) {
  double s = 40.0;
  for (int it = 0; it < 24; ++it) {
    const double rhs =
        (std::log(2.0 * kPi / tol) + (apb - 1.0) * std::log(std::max(s, 2.0))) /
        kPi;
    s = std::max(40.0, rhs);
  }
  return s;
}

// Adaptive driver. Panels stay sorted by left endpoint and the final sum runs
// in that order, so the result does not depend on the parallel schedule.
template <class F>
QuadResult adaptive_gk(const F& f, double S, double initial_width,
                       const QuadratureSpec& spec) {
  std::vector<Panel> panels;
  const int nhalf =
      std::max(1, static_cast<int>(std::ceil(S / initial_width)));
  const double w = S / nhalf;
  for (int i = -nhalf; i < nhalf; ++i)
    panels.push_back(Panel{i * w, (i + 1) * w});

  for (int pass = 0; pass < 200; ++pass) {
    std::vector<std::size_t> fresh;
    for (std::size_t i = 0; i < panels.size(); ++i)
      if (panels[i].fresh) fresh.push_back(i);
    par::parallel_for(
        fresh.size(), [&](std::size_t k) { evaluate_panel(panels[fresh[k]], f); },
        spec.parallel);

    Complex total{0.0, 0.0};
    double err_sum = 0.0;
    for (const Panel& p : panels) {
      total += p.val;
      err_sum += p.err;
    }
    const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
    if (err_sum <= tol)
      return QuadResult{total, err_sum, static_cast<int>(panels.size()), true};
    if (static_cast<int>(panels.size()) >= spec.max_subdivisions) break;

    const double threshold = tol / (2.0 * static_cast<double>(panels.size()));
    std::vector<Panel> next;
    next.reserve(panels.size() * 2);
    bool split_any = false;
    double worst = 0.0;
    for (const Panel& p : panels) worst = std::max(worst, p.err);
    for (const Panel& p : panels) {
      const bool split = p.err > threshold || (!split_any && p.err == worst);
      if (split) {
        const double mid = 0.5 * (p.lo + p.hi);
        next.push_back(Panel{p.lo, mid});
        next.push_back(Panel{mid, p.hi});
        split_any = true;
      } else {
        next.push_back(p);
      }
    }
    panels.swap(next);
  }
  throw std::runtime_error("quadrature: subdivision limit hit before convergence");
}

void check_indices(int n, int l) {
  if (n < 0 || l < 0)
    throw std::invalid_argument("oracle: quantum indices must be >= 0");
}

// Unit-normalized bound eigenfunction on the single-exponential mass branch;
// its squared modulus integrates to 1 over the whole line (see the norm test).
double bound_eigenfunction(int n, int l, double a, double w) {
  const double kap = (4.0 / (a * a)) * std::exp(-a * w);
  const double norm = std::sqrt(
      2.0 * static_cast<double>(std::exp(log_gamma_pos(n + 1.0L) -
                                         log_gamma_pos(n + l + 1.5L))));
  return norm * std::exp(-0.25 * a * w) *
         std::pow((2.0 / a) * std::exp(-0.5 * a * w), l + 1) *
         std::exp(-0.5 * kap) * laguerre(n, l + 0.5, kap);
}

double binom_half_integer(double x, int k) {
  double r = 1.0;
  for (int j = 0; j < k; ++j) r *= (x - j) / (j + 1);
  return r;
}

double factorial_d(int n) {
  double r = 1.0;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

}  // namespace

QuadResult quad_transform(const TransformParams& p, const QuadratureSpec& spec) {
  if (!(p.beta > 0.0) || !std::isfinite(p.beta))
    throw std::domain_error("quad_transform: requires beta > 0");
  if (p.alpha < 0.0 || !std::isfinite(p.alpha))
    throw std::domain_error("quad_transform: requires alpha >= 0");
  if (p.alpha == 0.0 && p.m < 1)
    throw std::domain_error("quad_transform: alpha = 0 requires m >= 1");
  if (p.m < 0 || p.m > 64)
    throw std::domain_error("quad_transform: m must be in [0, 64]");
  if (!std::isfinite(p.lambda))
    throw std::domain_error("quad_transform: lambda must be finite");

  const double S = spec.truncation > 0.0
                       ? spec.truncation
                       : solve_truncation(p.alpha + p.beta, spec.abs_tol);
  const double alpha = p.alpha, beta = p.beta, lambda = p.lambda;
  const int m = p.m;
  auto f = [alpha, beta, lambda, m](double s) -> Complex {
    const Complex g =
        complex_gamma(Complex(alpha, -s)) * complex_gamma(Complex(beta, s));
    const Complex phase(std::cos(lambda * s), -std::sin(lambda * s));
    return std::pow(s, m) * phase * g;
  };
  // Oscillation-aware initial panels for large |lambda|.
  const double w0 =
      std::abs(lambda) > 4.0 ? kPi / std::abs(lambda) : std::min(1.0, S);
  return adaptive_gk(f, S, w0, spec);
}

Complex quad_transform_limit(int m, double lambda,
                             const std::vector<double>& eps_ladder,
                             const QuadratureSpec& spec) {
  if (m < 1)
    throw std::domain_error("quad_transform_limit: requires m >= 1");
  if (eps_ladder.size() < 2)
    throw std::invalid_argument("quad_transform_limit: ladder needs >= 2 rungs");
  for (std::size_t i = 0; i < eps_ladder.size(); ++i) {
    if (!(eps_ladder[i] > 0.0))
      throw std::invalid_argument("quad_transform_limit: ladder must be positive");
    if (i > 0 && !(eps_ladder[i] < eps_ladder[i - 1]))
      throw std::invalid_argument("quad_transform_limit: ladder must decrease");
  }

  QuadratureSpec inner = spec;
  inner.rel_tol = std::min(spec.rel_tol, 1e-10);
  inner.abs_tol = std::min(spec.abs_tol, 1e-11);

  std::vector<double> xs(eps_ladder.begin(), eps_ladder.end());
  std::vector<Complex> ys(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    ys[i] = quad_transform(TransformParams{0.0, xs[i], m, lambda}, inner).value;

  // Neville extrapolation to eps = 0, componentwise.
  for (std::size_t j = 1; j < xs.size(); ++j)
    for (std::size_t i = xs.size() - 1; i >= j; --i)
      ys[i] = (xs[i - j] * ys[i] - xs[i] * ys[i - 1]) / (xs[i - j] - xs[i]);
  return ys.back();
}

double quad_wigner(int n, int l, double a, double x, double p) {
  check_indices(n, l);
  if (!(a > 0.0))
    throw std::domain_error("quad_wigner: requires a > 0");

  auto pair_product = [&](double y) {
    return bound_eigenfunction(n, l, a, x - 0.5 * y) *
           bound_eigenfunction(n, l, a, x + 0.5 * y);
  };

  // Truncate where both wavefunction factors have died off.
  const double scale = std::abs(pair_product(0.0)) + 1e-30;
  double Y = 1.0;
  int quiet = 0;
  while (quiet < 4 && Y < 400.0) {
    if (std::abs(pair_product(Y)) < 1e-20 * scale &&
        std::abs(pair_product(-Y)) < 1e-20 * scale)
      ++quiet;
    else
      quiet = 0;
    Y += 0.5;
  }

  const double width = std::min(0.5, 2.0 * kPi / (8.0 * (std::abs(p) + 0.25)));
  const int npanels = std::max(4, static_cast<int>(std::ceil(2.0 * Y / width)));
  const double h = 2.0 * Y / npanels;

  double acc_re = 0.0, acc_im = 0.0;
  for (int ip = 0; ip < npanels; ++ip) {
    const double c = -Y + (ip + 0.5) * h;
    const double hw = 0.5 * h;
    double pr = 0.0, pim = 0.0;
    for (int j = 0; j < 10; ++j) {
      for (int s = -1; s <= 1; s += 2) {
        const double y = c + s * hw * detail::kGl20X[j];
        const double v = pair_product(y);
        pr += detail::kGl20W[j] * v * std::cos(p * y);
        pim -= detail::kGl20W[j] * v * std::sin(p * y);
      }
    }
    acc_re += pr * hw;
    acc_im += pim * hw;
  }
  const double re = acc_re / (2.0 * kPi);
  const double im = acc_im / (2.0 * kPi);
  if (std::abs(im) > 1e-10)
    throw std::runtime_error("quad_wigner: imaginary residue above 1e-10");
  return re;
}

double quad_expectation_kappa(int n, int l, int q) {
  check_indices(n, l);
  if (q != 1 && q != 2)
    throw std::invalid_argument("quad_expectation_kappa: q must be 1 or 2");

  // kappa = u^2 turns the half-integer power into a smooth integrand:
  // integral_0^inf 2 u^{2l+q+2} e^{-u^2} L_n^{(l+1/2)}(u^2)^2 du.
  const double U = 9.0 + std::sqrt(static_cast<double>(l + n) + 2.0);
  const int npanels = static_cast<int>(std::ceil(U / 0.25));
  const double h = U / npanels;
  double acc = 0.0;
  for (int ip = 0; ip < npanels; ++ip) {
    const double c = (ip + 0.5) * h;
    const double hw = 0.5 * h;
    double pv = 0.0;
    for (int j = 0; j < 10; ++j) {
      for (int s = -1; s <= 1; s += 2) {
        const double u = c + s * hw * detail::kGl20X[j];
        const double lag = laguerre(n, l + 0.5, u * u);
        pv += detail::kGl20W[j] * 2.0 * std::pow(u, 2 * l + q + 2) *
              std::exp(-u * u) * lag * lag;
      }
    }
    acc += pv * hw;
  }
  return static_cast<double>(std::exp(log_gamma_pos(n + 1.0L) -
                                      log_gamma_pos(n + l + 1.5L))) *
         acc;
}

Complex quad_expectation_s(int n, int l, SMoment which) {
  check_indices(n, l);
  QuadratureSpec inner;
  inner.rel_tol = 1e-11;
  inner.abs_tol = 1e-13;

  const double head = static_cast<double>(
      std::exp(log_gamma_pos(n + 1.0L) - log_gamma_pos(n + l + 1.5L)));
  Complex total{0.0, 0.0};
  for (int l1 = 0; l1 <= n; ++l1) {
    for (int l2 = 0; l2 <= n; ++l2) {
      double gamma_coeff = head * binom_half_integer(n + l + 0.5, n - l1) *
                           binom_half_integer(n + l + 0.5, n - l2) /
                           (factorial_d(l1) * factorial_d(l2));
      if ((l1 + l2) & 1) gamma_coeff = -gamma_coeff;
      const int L = l + l1 + l2;
      Complex v;
      if (which == SMoment::pi) {
        const double s1 = 0.5 * l + l1 + 0.5;
        const double s2 = 0.5 * l + l2 + 0.5;
        v = std::ldexp(1.0, L) *
                quad_transform(TransformParams{s1, s2, 1, 0.0}, inner).value +
            Complex(0.0, 1.0) * std::ldexp(1.0, L - 2) *
                quad_transform(TransformParams{s1, s2, 0, 0.0}, inner).value;
      } else {
        const double z1 = 0.5 * l + l1 + 0.25;
        const double z2 = 0.5 * l + l2 + 0.25;
        v = std::pow(2.0, L + 0.5) *
                quad_transform(TransformParams{z1, z2, 2, 0.0}, inner).value +
            Complex(0.0, 1.0) * std::pow(2.0, L - 0.5) *
                quad_transform(TransformParams{z1, z2, 1, 0.0}, inner).value;
      }
      total += (2.0 / kPi) * gamma_coeff * v;
    }
  }
  return total;
}

}  // namespace gammaft
