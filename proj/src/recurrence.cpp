#include "mwz/recurrence.hpp"

#include <algorithm>

#include "mwz/errors.hpp"
#include "mwz/wz_system.hpp"

namespace mwz {

namespace {

struct Mono {
  long c;
  int dn, d1, d2;  // exponents of n, e1, e2
};

// printed monomials, in mutation-slot order
constexpr Mono kP[] = {
    {30, 7, 0, 0},  {105, 6, 0, 0},  {145, 5, 0, 0}, {-52, 5, 1, 0}, {100, 4, 0, 0},
    {-130, 4, 1, 0}, {35, 3, 0, 0},  {-124, 3, 1, 0}, {56, 3, 2, 0}, {-320, 3, 0, 1},
    {5, 2, 0, 0},   {-56, 2, 1, 0},  {84, 2, 2, 0},  {-480, 2, 0, 1}, {-16, 1, 3, 0},
    {48, 1, 2, 0},  {128, 1, 1, 1},  {-240, 1, 0, 1}, {-14, 1, 1, 0}, {-8, 0, 3, 0},
    {10, 0, 2, 0},  {64, 0, 1, 1},   {-2, 0, 1, 0},  {-40, 0, 0, 1},
};

constexpr Mono kQ[] = {
    {1, 8, 0, 0},   {-6, 6, 1, 0},  {9, 4, 2, 0},  {12, 4, 0, 1},
    {-4, 2, 3, 0},  {-16, 2, 1, 1}, {16, 0, 2, 1}, {-64, 0, 0, 2},
};

MultiPoly from_table(const Mono* table, int count, MutTarget target, const Mutation* m) {
  MultiPoly p;
  for (int i = 0; i < count; ++i) {
    Expo e{};
    e[static_cast<int>(Var::n)] = static_cast<std::uint16_t>(table[i].dn);
    e[static_cast<int>(Var::e1)] = static_cast<std::uint16_t>(table[i].d1);
    e[static_cast<int>(Var::e2)] = static_cast<std::uint16_t>(table[i].d2);
    const long c = mut_hits(m, target, i) ? -table[i].c : table[i].c;
    p += MultiPoly::monomial(e, Rational(c));
  }
  return p;
}

Rational eval_ne(const MultiPoly& p, long n, const ParamsE& pe) {
  Point pt{};
  pt.fill(Rational(0));
  pt[static_cast<int>(Var::n)] = Rational(n);
  pt[static_cast<int>(Var::e1)] = pe.e1;
  pt[static_cast<int>(Var::e2)] = pe.e2;
  return p.eval(pt);
}

MultiPoly coeff_of(const MultiPoly& p, Var v, std::size_t k) {
  auto cs = p.coeffs_in(v);
  return k < cs.size() ? cs[k] : MultiPoly();
}

}  // namespace

MultiPoly p_poly(const Mutation* m) {
  return from_table(kP, static_cast<int>(std::size(kP)), MutTarget::PolyP, m);
}

MultiPoly q_poly(const Mutation* m) {
  return from_table(kQ, static_cast<int>(std::size(kQ)), MutTarget::PolyQ, m);
}

Rational p_eval(long n, const ParamsE& pe) {
  static const MultiPoly p = p_poly();
  return eval_ne(p, n, pe);
}

Rational q_eval(long n, const ParamsE& pe) {
  static const MultiPoly q = q_poly();
  return eval_ne(q, n, pe);
}

LSequence::LSequence(InitCond init, ParamsE params)
    : init_(std::move(init)), params_(std::move(params)) {
  const Rational& e1 = params_.e1;
  const Rational& e2 = params_.e2;
  l_.push_back(init_.C0);
  l_.push_back((Rational(1, 3) - Rational(2, 15) * e1) * init_.A0 +
               (e1 / 6 - Rational(2, 15) * (e1 * e1 - 6 * e2) - Rational(1, 30)) * init_.C0);
  core_.push_back(Rational(0));  // unused slot, core is indexed from 1
  core_.push_back(Rational(1, 4));
}

Rational LSequence::at(long n) {
  if (n < 0) throw domain_error("L index must be nonnegative");
  while (static_cast<long>(l_.size()) <= n) {
    const long i = static_cast<long>(l_.size()) - 1;  // recurrence at order i >= 1
    const Rational lead = 4 * Rational(4 * i + 3) * Rational(4 * i + 5) *
                          (Rational(5 * i * i) - 2 * params_.e1);
    if (lead == 0)
      throw domain_error("recurrence leading coefficient vanishes at n = " + std::to_string(i));
    const Rational next =
        (-2 * Rational(i + 1) * p_eval(i, params_) * l_[i] +
         Rational(i) * Rational(i + 1) * (Rational(5 * (i + 1) * (i + 1)) - 2 * params_.e1) *
             q_eval(i, params_) * l_[i - 1]) /
        lead;
    l_.push_back(next);
  }
  return l_[n];
}

Rational LSequence::core(long n) {
  if (n < 1) throw domain_error("core index must be positive");
  while (static_cast<long>(core_.size()) <= n) {
    const long i = static_cast<long>(core_.size()) - 1;  // extend core(i) -> core(i+1)
    const Rational i2(i * i);
    core_.push_back(core_[i] * Rational(-i) * ((i2 - params_.e1) * (i2 - params_.e1) - 4 * params_.e2) /
                    (2 * Rational(2 * i + 1)));
  }
  return core_[n];
}

Rational LSequence::carrier(long n) {
  if (n < 0) throw domain_error("carrier index must be nonnegative");
  return 2 * init_.B0 * core(n + 1);
}

Rational d_coeff(long n, LSequence& seq) {
  if (n < 1) throw domain_error("d_coeff index must be positive");
  const Rational& e1 = seq.params().e1;
  const Rational& e2 = seq.params().e2;
  const Rational n2(n * n);
  const Rational s = 5 * n2 - 2 * e1;
  if (s == 0) throw domain_error("d_coeff pole at n = " + std::to_string(n));
  const Rational n3 = n2 * n, n5 = n2 * n3;
  return seq.init().B0 * seq.core(n) * (5 * n2 - e1) +
         Rational(20 * n + 5) / (2 * s) * seq.at(n) +
         (35 * n5 - 35 * n3 * e1 + 4 * n * (3 * e1 * e1 - 10 * e2)) / (4 * s) * seq.at(n - 1);
}

Real ratio_estimate(LSequence& seq, long n, Precision p) {
  if (n < 10) throw domain_error("ratio_estimate needs n >= 10");
  const Rational& ln = seq.at(n);
  if (ln == 0) throw domain_error("ratio_estimate undefined on a zero term");
  Integer f4;
  mpz_pow_ui(f4.get_mpz_t(), factorial(static_cast<unsigned long>(n)).get_mpz_t(), 4);
  Rational ratio = rat_abs(ln) / Rational(f4);
  return real_rootn(Real(ratio, p), static_cast<unsigned long>(n));
}

DeriveResult derive_l_recurrence(const Mutation* m) {
  using namespace wzsys;
  DeriveResult out;

  const RatFun n1 = RatFun::variable(Var::n) + RatFun(Rational(1));
  const RatFun n2 = n1 + RatFun(Rational(1));
  const RatFun Lv = RatFun::variable(Var::L);
  const RatFun L2v = RatFun::variable(Var::L2);
  const RatFun L3v = RatFun::variable(Var::L3);
  const RatFun Pv = RatFun::variable(Var::P);
  const RatFun Pshift = rho(n1) * Pv;

  const RatFun R = eq11_lhsE(n1, m) * closed_E(n2, L2v, L3v, Pshift) -
                   eq11_lhsK(n1, m) * closed_K(n2, L2v, Pshift) + eq11_lhsL(n1, m) * L2v -
                   eq11_rhs(n1, closed_E(n1, Lv, L2v, Pv), closed_K(n1, Lv, Pv), Lv, m);

  const MultiPoly num = R.num();
  const MultiPoly in_p = coeff_of(num, Var::P, 1);
  out.carrier_cancels = in_p.is_zero() && num.degree_in(Var::P) <= 1;
  if (!out.carrier_cancels) out.residuals.push_back("carrier survives elimination");

  const MultiPoly body = coeff_of(num, Var::P, 0);
  const MultiPoly a = coeff_of(body, Var::L3, 1);
  const MultiPoly rest = coeff_of(body, Var::L3, 0);
  const MultiPoly b = coeff_of(rest, Var::L2, 1);
  const MultiPoly rest2 = coeff_of(rest, Var::L2, 0);
  const MultiPoly c = coeff_of(rest2, Var::L, 1);
  if (!coeff_of(rest2, Var::L, 0).is_zero())
    out.residuals.push_back("relation is not homogeneous in the L values");

  // (a, b, c) couples L(n+2), L(n+1), L(n); compare at orders shifted by one
  const MultiPoly shift = MultiPoly::variable(Var::n) - MultiPoly::constant(Rational(1));
  const MultiPoly as = a.subst(Var::n, shift);
  const MultiPoly bs = b.subst(Var::n, shift);
  const MultiPoly cs = c.subst(Var::n, shift);

  const MultiPoly vn = MultiPoly::variable(Var::n);
  const MultiPoly ve1 = MultiPoly::variable(Var::e1);
  const MultiPoly four = MultiPoly::constant(Rational(4));
  const MultiPoly alpha_p = four * (vn * Rational(4) + MultiPoly::constant(Rational(3))) *
                            (vn * Rational(4) + MultiPoly::constant(Rational(5))) *
                            (vn * vn * Rational(5) - ve1 * Rational(2));
  const MultiPoly np1 = vn + MultiPoly::constant(Rational(1));
  const MultiPoly beta_p = (np1 * Rational(2)) * p_poly(m);
  const MultiPoly gamma_p =
      -(vn * np1) * ((np1 * np1) * Rational(5) - ve1 * Rational(2)) * q_poly(m);

  auto f = as.divide_exact(alpha_p);
  bool ok = out.carrier_cancels && out.residuals.empty() && f.has_value() && !f->is_zero();
  if (!f.has_value()) {
    out.residuals.push_back("leading coefficient is not a multiple of the printed one");
  } else if (!f->is_zero()) {
    if (!(bs == *f * beta_p)) {
      ok = false;
      out.residuals.push_back("middle coefficient differs from the printed one");
    }
    if (!(cs == *f * gamma_p)) {
      ok = false;
      out.residuals.push_back("trailing coefficient differs from the printed one");
    }
    if (ok) {
      out.alpha = *as.divide_exact(*f);
      out.beta = *bs.divide_exact(*f);
      out.gamma = *cs.divide_exact(*f);
    }
  } else {
    ok = false;
    out.residuals.push_back("derived relation degenerates");
  }
  out.pass = ok;
  return out;
}

}  // namespace mwz
