#include "mwz/mpoly.hpp"

#include <algorithm>
#include <utility>

#include "mwz/errors.hpp"

namespace mwz {

const char* var_name(Var v) {
  static const char* names[kNumVars] = {"k", "n", "e1", "e2", "E", "K", "L", "L2", "L3", "P"};
  return names[static_cast<int>(v)];
}

bool GrlexLess::operator()(const Expo& a, const Expo& b) const {
  unsigned da = 0, db = 0;
  for (int i = 0; i < kNumVars; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db;
  for (int i = 0; i < kNumVars; ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

MultiPoly MultiPoly::constant(const Rational& c) {
  MultiPoly p;
  if (c != 0) p.t_.emplace(Expo{}, c);
  return p;
}

MultiPoly MultiPoly::variable(Var v) {
  Expo e{};
  e[static_cast<int>(v)] = 1;
  return monomial(e, Rational(1));
}

MultiPoly MultiPoly::monomial(const Expo& e, const Rational& c) {
  MultiPoly p;
  if (c != 0) p.t_.emplace(e, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first == Expo{});
}

Rational MultiPoly::constant_value() const {
  if (t_.empty()) return Rational(0);
  if (!is_constant()) throw domain_error("constant_value of a non-constant polynomial");
  return t_.begin()->second;
}

long MultiPoly::degree_in(Var v) const {
  if (t_.empty()) return -1;
  long d = 0;
  for (const auto& [e, c] : t_) d = std::max(d, static_cast<long>(e[static_cast<int>(v)]));
  return d;
}

long MultiPoly::total_degree() const {
  if (t_.empty()) return -1;
  long d = 0;
  for (const auto& [e, c] : t_) {
    long s = 0;
    for (int i = 0; i < kNumVars; ++i) s += e[i];
    d = std::max(d, s);
  }
  return d;
}

void MultiPoly::add_term(const Expo& e, const Rational& c) {
  auto [it, fresh] = t_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& [e, c] : r.t_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [e, v] : t_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ea, ca] : a.t_) {
    for (const auto& [eb, cb] : b.t_) {
      Expo e;
      for (int i = 0; i < kNumVars; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

std::vector<MultiPoly> MultiPoly::coeffs_in(Var v) const {
  const long d = degree_in(v);
  if (d < 0) return {};
  std::vector<MultiPoly> out(static_cast<std::size_t>(d) + 1);
  const int vi = static_cast<int>(v);
  for (const auto& [e, c] : t_) {
    Expo r = e;
    const std::uint16_t p = r[vi];
    r[vi] = 0;
    out[p].add_term(r, c);
  }
  return out;
}

Rational MultiPoly::eval(const Point& point) const {
  std::array<std::vector<Rational>, kNumVars> pw;
  for (int i = 0; i < kNumVars; ++i) pw[i].push_back(Rational(1));
  Rational acc(0);
  for (const auto& [e, c] : t_) {
    Rational term = c;
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      auto& p = pw[i];
      while (p.size() <= static_cast<std::size_t>(e[i])) p.push_back(p.back() * point[i]);
      term *= p[e[i]];
    }
    acc += term;
  }
  return acc;
}

MultiPoly MultiPoly::subst(Var v, const MultiPoly& value) const {
  const int vi = static_cast<int>(v);
  std::vector<MultiPoly> pw{MultiPoly::constant(Rational(1))};
  MultiPoly out;
  for (const auto& [e, c] : t_) {
    while (pw.size() <= static_cast<std::size_t>(e[vi])) pw.push_back(pw.back() * value);
    Expo r = e;
    r[vi] = 0;
    out += MultiPoly::monomial(r, c) * pw[e[vi]];
  }
  return out;
}

Rational MultiPoly::content() const {
  if (t_.empty()) return Rational(0);
  Integer g(0), l(1);
  for (const auto& [e, c] : t_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational r(g, l);
  r.canonicalize();
  return t_.rbegin()->second < 0 ? Rational(-r) : r;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw domain_error("division by the zero polynomial");
  MultiPoly q, r(*this);
  const auto& ld = *divisor.t_.rbegin();
  while (!r.is_zero()) {
    const auto& lr = *r.t_.rbegin();
    Expo e;
    for (int i = 0; i < kNumVars; ++i) {
      if (lr.first[i] < ld.first[i]) return std::nullopt;
      e[i] = static_cast<std::uint16_t>(lr.first[i] - ld.first[i]);
    }
    const MultiPoly t = MultiPoly::monomial(e, lr.second / ld.second);
    q += t;
    r -= t * divisor;
  }
  return q;
}

std::string MultiPoly::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c < 0 ? Rational(-c) : c;
    out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    std::string mono;
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(static_cast<Var>(i));
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += rat_string(a);
    } else {
      if (a != 1) out += rat_string(a) + "*";
      out += mono;
    }
  }
  return out;
}

MultiPoly poly_pow(const MultiPoly& p, unsigned e) {
  MultiPoly r = MultiPoly::constant(Rational(1));
  for (unsigned i = 0; i < e; ++i) r = r * p;
  return r;
}

RatFun::RatFun(const Rational& c) : num_(MultiPoly::constant(c)), den_(MultiPoly::constant(Rational(1))) {}

RatFun::RatFun(const MultiPoly& p) : num_(p), den_(MultiPoly::constant(Rational(1))) {}

RatFun::RatFun(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw domain_error("rational function with zero denominator");
  normalize();
}

RatFun RatFun::variable(Var v) {
  return RatFun(MultiPoly::variable(v));
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(Rational(1));
    return;
  }
  // strip the common monomial factor
  Expo m;
  m.fill(std::uint16_t(65535));
  auto shrink = [&m](const MultiPoly& p) {
    for (const auto& [e, c] : p.terms())
      for (int i = 0; i < kNumVars; ++i) m[i] = std::min(m[i], e[i]);
  };
  shrink(num_);
  shrink(den_);
  bool nontrivial = false;
  for (int i = 0; i < kNumVars; ++i) nontrivial = nontrivial || m[i] > 0;
  if (nontrivial) {
    const MultiPoly mono = MultiPoly::monomial(m, Rational(1));
    num_ = *num_.divide_exact(mono);
    den_ = *den_.divide_exact(mono);
  }
  if (den_.is_constant()) {
    num_ *= 1 / den_.constant_value();
    den_ = MultiPoly::constant(Rational(1));
    return;
  }
  if (auto q = num_.divide_exact(den_)) {
    num_ = *q;
    den_ = MultiPoly::constant(Rational(1));
    return;
  }
  const Rational c = den_.content();
  num_ *= 1 / c;
  den_ *= 1 / c;
}

RatFun RatFun::operator-() const {
  RatFun r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) {
  return *this += -o;
}

RatFun& RatFun::operator*=(const RatFun& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
  if (o.is_zero()) throw domain_error("division by the zero rational function");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

bool operator==(const RatFun& a, const RatFun& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

Rational RatFun::eval(const Point& point) const {
  const Rational d = den_.eval(point);
  if (d == 0) throw domain_error("denominator vanishes at the evaluation point");
  return num_.eval(point) / d;
}

std::string RatFun::str() const {
  if (is_poly()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

RatFun subst_ratfun(const MultiPoly& p, const std::map<Var, RatFun>& bind) {
  std::array<std::vector<RatFun>, kNumVars> pw;
  for (int i = 0; i < kNumVars; ++i) pw[i].push_back(RatFun(Rational(1)));
  RatFun out;
  for (const auto& [e, c] : p.terms()) {
    RatFun term{c};
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      auto& powers = pw[i];
      if (powers.size() == 1) {
        auto it = bind.find(static_cast<Var>(i));
        powers.push_back(it != bind.end() ? it->second : RatFun::variable(static_cast<Var>(i)));
      }
      while (powers.size() <= static_cast<std::size_t>(e[i])) powers.push_back(powers.back() * powers[1]);
      term *= powers[e[i]];
    }
    out += term;
  }
  return out;
}

}  // namespace mwz
