#pragma once
#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mwz {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p" or "p/q" with an optional leading sign and q > 0. Anything else
// (floats, spaces, "p/-q", division by zero) throws std::invalid_argument.
Rational parse_rational(std::string_view s);

// Canonical "p" or "p/q" form, q > 1 only when needed.
std::string rat_string(const Rational& q);

// C(n, k). k > n is a domain_error rather than 0: callers index real objects.
Rational binomial(unsigned long n, unsigned long k);

Integer factorial(unsigned long n);

// q^e for integer e (negative allowed, q != 0 then).
Rational rat_pow(const Rational& q, long e);

// m^4 - e1*m^2 + e2 evaluated at integer m.
Rational sym_factor(const Rational& e1, const Rational& e2, long m);

// prod_{m=lo}^{hi} sym_factor(e1, e2, m); empty when lo > hi. A vanishing
// factor raises pole_error carrying the offending m.
Rational sym_product(const Rational& e1, const Rational& e2, long lo, long hi);

Rational rat_abs(const Rational& q);

}  // namespace mwz
