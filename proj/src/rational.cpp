#include "mwz/rational.hpp"

#include <cctype>

#include "mwz/errors.hpp"

namespace mwz {

Rational parse_rational(std::string_view s) {
  const auto bad = [&] {
    throw std::invalid_argument("not a rational: '" + std::string(s) + "'");
  };
  size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  size_t num_begin = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == num_begin) bad();
  if (i < s.size()) {
    if (s[i] != '/') bad();
    ++i;
    size_t den_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == den_begin || i != s.size()) bad();
    if (s.substr(den_begin).find_first_not_of('0') == std::string_view::npos)
      throw std::invalid_argument("zero denominator: '" + std::string(s) + "'");
  }
  Rational q;
  // mpq_set_str takes a minus sign but not an explicit plus
  std::string t(s[0] == '+' ? s.substr(1) : s);
  if (q.set_str(t, 10) != 0) bad();
  q.canonicalize();
  return q;
}

std::string rat_string(const Rational& q) {
  return q.get_str();
}

Rational binomial(unsigned long n, unsigned long k) {
  if (k > n) throw domain_error("binomial: k > n");
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

Integer factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational rat_pow(const Rational& q, long e) {
  if (e == 0) return Rational(1);
  if (q == 0 && e < 0) throw domain_error("rat_pow: 0 to a negative power");
  const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num().get_mpz_t(), a);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den().get_mpz_t(), a);
  if (e < 0) r = 1 / r;
  return r;
}

Rational sym_factor(const Rational& e1, const Rational& e2, long m) {
  const Rational m2 = Rational(m) * m;
  return m2 * m2 - e1 * m2 + e2;
}

Rational sym_product(const Rational& e1, const Rational& e2, long lo, long hi) {
  Rational p(1);
  for (long m = lo; m <= hi; ++m) {
    const Rational f = sym_factor(e1, e2, m);
    if (f == 0) throw pole_error(m);
    p *= f;
  }
  return p;
}

Rational rat_abs(const Rational& q) {
  return q < 0 ? Rational(-q) : q;
}

}  // namespace mwz
