#include "gammaft/rational.hpp"

#include <stdexcept>

namespace gammaft {

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational pochhammer(const Rational& a, unsigned long n) {
  Rational r(1);
  Rational f = a;
  for (unsigned long k = 0; k < n; ++k) {
    r *= f;
    f += 1;
  }
  return r;
}

Rational rational_pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  Rational b = base;
  long e = exp;
  if (e < 0) {
    if (b == 0) throw std::domain_error("rational_pow: zero to negative power");
    b = 1 / b;
    e = -e;
  }
  Rational r(1);
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("parse_rational: cannot parse '" + s + "'");
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace gammaft
