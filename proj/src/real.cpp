#include "mwz/real.hpp"

#include <cmath>
#include <cstdlib>
#include <utility>

#include "mwz/errors.hpp"

namespace mwz {

Precision::Precision(long d) : digits(d) {
  if (d < 1 || d > 100000) throw domain_error("precision out of range");
}

mpfr_prec_t Precision::bits() const {
  const double need = (digits + kGuardDigits) * 3.3219280948873626;
  return static_cast<mpfr_prec_t>(need) + 9;
}

Real::Real() : Real(Precision(20)) {}

Real::Real(Precision p) : digits_(p.digits) {
  mpfr_init2(v_, p.bits());
  mpfr_set_zero(v_, 1);
}

Real::Real(const Rational& q, Precision p) : digits_(p.digits) {
  mpfr_init2(v_, p.bits());
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

Real::Real(long v, Precision p) : digits_(p.digits) {
  mpfr_init2(v_, p.bits());
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(const Real& o) : digits_(o.digits_) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept : digits_(o.digits_) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
    digits_ = o.digits_;
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  if (this != &o) {
    mpfr_swap(v_, o.v_);
    digits_ = o.digits_;
  }
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

void Real::grow_to(mpfr_prec_t bits) {
  if (mpfr_get_prec(v_) >= bits) return;
  mpfr_t t;
  mpfr_init2(t, bits);
  mpfr_set(t, v_, MPFR_RNDN);
  mpfr_swap(v_, t);
  mpfr_clear(t);
}

Real& Real::operator+=(const Real& o) {
  grow_to(mpfr_get_prec(o.v_));
  if (o.digits_ > digits_) digits_ = o.digits_;
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  grow_to(mpfr_get_prec(o.v_));
  if (o.digits_ > digits_) digits_ = o.digits_;
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  grow_to(mpfr_get_prec(o.v_));
  if (o.digits_ > digits_) digits_ = o.digits_;
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  if (o.is_zero()) throw domain_error("division by zero");
  grow_to(mpfr_get_prec(o.v_));
  if (o.digits_ > digits_) digits_ = o.digits_;
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator+=(const Rational& q) {
  mpfr_t t;
  mpfr_init2(t, mpfr_get_prec(v_));
  mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDN);
  mpfr_add(v_, v_, t, MPFR_RNDN);
  mpfr_clear(t);
  return *this;
}

Real& Real::operator*=(long v) {
  mpfr_mul_si(v_, v_, v, MPFR_RNDN);
  return *this;
}

std::string Real::to_decimal(long sig) const {
  if (sig <= 0) sig = digits_;
  if (is_zero()) return "0";
  mpfr_exp_t e;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(sig), v_, MPFR_RNDN);
  std::string m(raw);
  mpfr_free_str(raw);
  const bool neg = !m.empty() && m[0] == '-';
  std::string d = neg ? m.substr(1) : m;
  std::string out;
  // value = 0.d * 10^e
  if (e > 0 && e <= 21 && e <= static_cast<mpfr_exp_t>(d.size())) {
    out = d.substr(0, static_cast<size_t>(e));
    if (static_cast<size_t>(e) < d.size()) out += "." + d.substr(static_cast<size_t>(e));
  } else if (e <= 0 && e > -5) {
    out = "0." + std::string(static_cast<size_t>(-e), '0') + d;
  } else {
    out = d.substr(0, 1);
    if (d.size() > 1) out += "." + d.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
  }
  return neg ? "-" + out : out;
}

bool Real::agrees_to(const Real& o, long digits) const {
  Real diff = real_abs(*this - o);
  Real tol = Real::pow10(-digits, Precision(std::max(digits_, static_cast<long>(20))));
  return diff < tol;
}

Real Real::pi(Precision p) {
  Real r(p);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::pow10(long e, Precision p) {
  Real r(p);
  mpfr_set_si(r.v_, 10, MPFR_RNDN);
  mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

Real real_abs(Real a) {
  mpfr_abs(a.raw(), a.raw(), MPFR_RNDN);
  return a;
}

Real real_log10(const Real& a) {
  if (a.sign() <= 0) throw domain_error("log10 of a non-positive value");
  Real r(Precision(a.digits()));
  mpfr_log10(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

Real real_rootn(Real a, unsigned long n) {
  mpfr_rootn_ui(a.raw(), a.raw(), n, MPFR_RNDN);
  return a;
}

Real real_mul_q(const Real& a, const Rational& q) {
  Real t(q, Precision(a.digits()));
  return a * t;
}

}  // namespace mwz
