#pragma once
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mwz/rational.hpp"

namespace mwz {

// Fixed alphabet. k is the summation variable, n the order, e1/e2 the kernel
// parameters, E/K/L the free numerator coefficients at order n, L2/L3 the
// L-values at orders n+1/n+2, P the product-form carrier.
inline constexpr int kNumVars = 10;

enum class Var : int { k = 0, n, e1, e2, E, K, L, L2, L3, P };

const char* var_name(Var v);

using Expo = std::array<std::uint16_t, kNumVars>;
using Point = std::array<Rational, kNumVars>;

struct GrlexLess {
  bool operator()(const Expo& a, const Expo& b) const;
};

// Sparse multivariate polynomial over Q. The zero polynomial has no terms.
class MultiPoly {
 public:
  MultiPoly() = default;

  static MultiPoly constant(const Rational& c);
  static MultiPoly variable(Var v);
  static MultiPoly monomial(const Expo& e, const Rational& c);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant()
  long degree_in(Var v) const;      // -1 for the zero polynomial
  long total_degree() const;        // -1 for the zero polynomial
  std::size_t term_count() const { return t_.size(); }
  const std::map<Expo, Rational, GrlexLess>& terms() const { return t_; }

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.t_ == b.t_; }

  // Coefficient polynomials of v^0..v^deg; empty for the zero polynomial.
  std::vector<MultiPoly> coeffs_in(Var v) const;

  Rational eval(const Point& point) const;
  MultiPoly subst(Var v, const MultiPoly& value) const;

  // gcd of the coefficients carrying the sign of the leading one; 0 for zero.
  Rational content() const;

  // Quotient when the division leaves no remainder, nullopt otherwise.
  std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

  std::string str() const;

 private:
  std::map<Expo, Rational, GrlexLess> t_;
  void add_term(const Expo& e, const Rational& c);
};

MultiPoly poly_pow(const MultiPoly& p, unsigned e);

// Quotient of polynomials, normalized so the denominator is primitive with a
// positive leading coefficient and shares no monomial or exact polynomial
// factor with the numerator.
class RatFun {
 public:
  RatFun() : den_(MultiPoly::constant(1)) {}
  RatFun(const Rational& c);
  RatFun(const MultiPoly& p);
  RatFun(MultiPoly num, MultiPoly den);
  static RatFun variable(Var v);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.is_constant(); }

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);

  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend bool operator==(const RatFun& a, const RatFun& b);

  Rational eval(const Point& point) const;  // domain_error on a denominator zero
  std::string str() const;

 private:
  MultiPoly num_;
  MultiPoly den_;
  void normalize();
};

// Substitutes bindings simultaneously; unbound variables stay themselves.
RatFun subst_ratfun(const MultiPoly& p, const std::map<Var, RatFun>& bind);

}  // namespace mwz
