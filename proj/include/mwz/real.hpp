#pragma once
#include <mpfr.h>

#include <string>

#include "mwz/rational.hpp"

namespace mwz {

// Guard digits carried on top of every precision request. All rounding error
// lives below the guard band, so results quoted to the requested digits are
// correctly rounded in practice.
inline constexpr long kGuardDigits = 15;

struct Precision {
  long digits;
  explicit Precision(long d);
  mpfr_prec_t bits() const;
};

// Value-semantic MPFR real. Binary operations round at the wider operand's
// precision; there is no silent down-conversion.
class Real {
 public:
  Real();
  explicit Real(Precision p);
  Real(const Rational& q, Precision p);
  Real(long v, Precision p);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  long digits() const { return digits_; }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // Exactly sig significant decimal digits; scientific form outside
  // [1e-5, 1e+21). sig <= 0 defaults to digits().
  std::string to_decimal(long sig = 0) const;

  // |*this - o| < 10^-digits
  bool agrees_to(const Real& o, long digits) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator+=(const Rational& q);
  Real& operator*=(long v);

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator-(Real a) {
    mpfr_neg(a.v_, a.v_, MPFR_RNDN);
    return a;
  }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

  static Real pi(Precision p);
  static Real pow10(long e, Precision p);

 private:
  void grow_to(mpfr_prec_t bits);
  mpfr_t v_;
  long digits_;
};

Real real_abs(Real a);
Real real_log10(const Real& a);  // a > 0
Real real_rootn(Real a, unsigned long n);
Real real_mul_q(const Real& a, const Rational& q);

}  // namespace mwz
