#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gammaft {

// Exact arbitrary-precision arithmetic used by the number-theory path.
// GMP keeps rationals canonical (reduced, positive denominator) after every
// arithmetic operation; constructors are canonicalized by the helpers below.
using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

// Rising factorial (a)_n as a product; total even at non-positive a.
Rational pochhammer(const Rational& a, unsigned long n);

Rational rational_pow(const Rational& base, long exp);

// Accepts "num" or "num/den" with optional sign; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace gammaft
