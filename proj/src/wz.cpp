#include "mwz/wz.hpp"

#include <algorithm>
#include <memory>
#include <vector>

#include "mwz/errors.hpp"
#include "mwz/genfunc.hpp"
#include "mwz/sum.hpp"
#include "mwz/wz_system.hpp"

namespace mwz {

namespace {

RatFun rfv(Var v) { return RatFun::variable(v); }
RatFun rfc(long v) { return RatFun(Rational(v)); }

RatFun rf_pow(const RatFun& f, unsigned e) {
  RatFun r = rfc(1);
  for (unsigned i = 0; i < e; ++i) r *= f;
  return r;
}

Point state_point(long n, const ParamsE& pe) {
  Point pt;
  pt.fill(Rational(0));
  pt[static_cast<int>(Var::n)] = Rational(n);
  pt[static_cast<int>(Var::e1)] = pe.e1;
  pt[static_cast<int>(Var::e2)] = pe.e2;
  return pt;
}

struct ClosedForms {
  RatFun A, B, C, D, E, K;  // functions of n, e1, e2, L, L2, P
};

const ClosedForms& closed_forms() {
  using namespace wzsys;
  static const ClosedForms cf = [] {
    const RatFun n1 = rfv(Var::n) + rfc(1);
    const RatFun Lv = rfv(Var::L), L2v = rfv(Var::L2), Pv = rfv(Var::P);
    ClosedForms f;
    f.K = closed_K(n1, Lv, Pv);
    f.E = closed_E(n1, Lv, L2v, Pv);
    f.D = closed_D(n1, Lv, L2v, Pv);
    f.C = eq6_C(n1, Lv);
    f.B = eq6_B(n1, f.K, Lv);
    f.A = eq7_A(n1, f.E, f.K, Lv);
    return f;
  }();
  return cf;
}

struct ForwardStep {
  RatFun Lnext, Knext, Enext, A, B, C, D;  // functions of n, e1, e2, E, K, L
};

const ForwardStep& forward_step() {
  using namespace wzsys;
  static const ForwardStep fs = [] {
    const RatFun n1 = rfv(Var::n) + rfc(1);
    const RatFun Ev = rfv(Var::E), Kv = rfv(Var::K), Lv = rfv(Var::L);
    ForwardStep f;
    f.Lnext = eq9_Lnext(n1, Ev, Kv, Lv);
    f.Knext = eq10_Knext(n1, Ev, Kv, Lv, f.Lnext);
    f.Enext = eq11_Enext(n1, Ev, Kv, Lv, f.Knext, f.Lnext);
    f.C = eq6_C(n1, Lv);
    f.B = eq6_B(n1, Kv, Lv);
    f.A = eq7_A(n1, Ev, Kv, Lv);
    f.D = eq8_D(n1, Ev, Kv, Lv);
    return f;
  }();
  return fs;
}

}  // namespace

Rational kernel_H(long n, long k, const ParamsE& pe) {
  if (n < 0 || k < 0) throw domain_error("kernel_H needs n, k >= 0");
  return 1 / sym_product(pe.e1, pe.e2, k + 1, n + k + 1);
}

CoeffState coeff_state(long n, LSequence& seq) {
  if (n < 0) throw domain_error("coeff_state needs n >= 0");
  const ClosedForms& cf = closed_forms();
  Point pt = state_point(n, seq.params());
  pt[static_cast<int>(Var::L)] = seq.at(n);
  pt[static_cast<int>(Var::L2)] = seq.at(n + 1);
  pt[static_cast<int>(Var::P)] = seq.carrier(n);
  CoeffState st;
  st.n = n;
  st.A = cf.A.eval(pt);
  st.B = cf.B.eval(pt);
  st.C = cf.C.eval(pt);
  st.D = cf.D.eval(pt);
  st.E = cf.E.eval(pt);
  st.K = cf.K.eval(pt);
  st.L = seq.at(n);
  return st;
}

CoeffState coeff_state_forward(long n, LSequence& seq) {
  if (n < 0) throw domain_error("coeff_state_forward needs n >= 0");
  const ForwardStep& fs = forward_step();
  const InitCond& init = seq.init();
  const ParamsE& pe = seq.params();
  // order-0 seed inverted from the structure relations at n1 = 1
  Rational L = init.C0;
  Rational K = (init.B0 + 7 * init.C0) / 2;
  Rational E = (init.A0 + 9 * K - (19 + 2 * pe.e1) * L) / 3;
  for (long i = 0; i < n; ++i) {
    Point pt = state_point(i, pe);
    pt[static_cast<int>(Var::E)] = E;
    pt[static_cast<int>(Var::K)] = K;
    pt[static_cast<int>(Var::L)] = L;
    const Rational Ln = fs.Lnext.eval(pt);
    const Rational Kn = fs.Knext.eval(pt);
    const Rational En = fs.Enext.eval(pt);
    L = Ln;
    K = Kn;
    E = En;
  }
  Point pt = state_point(n, pe);
  pt[static_cast<int>(Var::E)] = E;
  pt[static_cast<int>(Var::K)] = K;
  pt[static_cast<int>(Var::L)] = L;
  CoeffState st;
  st.n = n;
  st.A = fs.A.eval(pt);
  st.B = fs.B.eval(pt);
  st.C = fs.C.eval(pt);
  st.D = fs.D.eval(pt);
  st.E = E;
  st.K = K;
  st.L = L;
  return st;
}

Rational F_eval(long n, long k, const CoeffState& st, const ParamsE& pe) {
  const Rational k1(k + 1);
  return kernel_H(n, k, pe) * (st.A + st.B * k1 + st.C * k1 * k1);
}

Rational G_eval(long n, long k, const CoeffState& st, const ParamsE& pe) {
  const Rational kq(k);
  return kernel_H(n, k, pe) * (st.D + st.E * kq + st.K * kq * kq + st.L * kq * kq * kq);
}

CertReport certify_numeric(long n_max, long k_max, const InitCond& init, const ParamsE& pe) {
  CertReport rep;
  rep.mode = "numeric";
  LSequence seq(init, pe);
  std::vector<CoeffState> states;
  states.reserve(static_cast<std::size_t>(n_max) + 2);
  for (long n = 0; n <= n_max + 1; ++n) states.push_back(coeff_state(n, seq));

  rep.checked.push_back("order-0 seed round trip");
  if (!(states[0].A == init.A0 && states[0].B == init.B0 && states[0].C == init.C0))
    rep.residuals.push_back("seed round trip");

  rep.checked.push_back("pair relation on the grid n <= " + std::to_string(n_max) +
                        ", k <= " + std::to_string(k_max));
  for (long n = 0; n <= n_max; ++n) {
    for (long k = 0; k <= k_max; ++k) {
      const Rational lhs = F_eval(n + 1, k, states[static_cast<std::size_t>(n + 1)], pe) -
                           F_eval(n, k, states[static_cast<std::size_t>(n)], pe);
      const Rational rhs = G_eval(n, k + 1, states[static_cast<std::size_t>(n)], pe) -
                           G_eval(n, k, states[static_cast<std::size_t>(n)], pe);
      if (lhs != rhs) {
        if (rep.residuals.size() < 20)
          rep.residuals.push_back("(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")");
      }
    }
  }
  rep.pass = rep.residuals.empty();
  return rep;
}

CertReport certify_symbolic(const Mutation* m) {
  using namespace wzsys;
  CertReport rep;
  rep.mode = "symbolic";

  const RatFun u = rfv(Var::k);
  const RatFun n1 = rfv(Var::n) + rfc(1);
  const RatFun Ev = rfv(Var::E), Kv = rfv(Var::K), Lv = rfv(Var::L);
  const RatFun L2v = rfv(Var::L2), Pv = rfv(Var::P);
  const RatFun e1 = rfv(Var::e1), e2 = rfv(Var::e2);

  const RatFun A = eq7_A(n1, Ev, Kv, Lv, m);
  const RatFun B = eq6_B(n1, Kv, Lv, m);
  const RatFun C = eq6_C(n1, Lv, m);
  const RatFun D = eq8_D(n1, Ev, Kv, Lv, m);
  const RatFun Lp = eq9_Lnext(n1, Ev, Kv, Lv, m);
  const RatFun Kp = eq10_Knext(n1, Ev, Kv, Lv, Lp, m);
  const RatFun Ep = eq11_Enext(n1, Ev, Kv, Lv, Kp, Lp, m);
  const RatFun A1 = eq7_A(n1 + rfc(1), Ep, Kp, Lp, m);
  const RatFun B1 = eq6_B(n1 + rfc(1), Kp, Lp, m);
  const RatFun C1 = eq6_C(n1 + rfc(1), Lp, m);

  const RatFun W = rf_pow(n1 + u, 4) - e1 * rf_pow(n1 + u, 2) + e2;
  const RatFun V = rf_pow(u, 4) - e1 * rf_pow(u, 2) + e2;
  const RatFun Pn = A + B * u + C * rf_pow(u, 2);
  const RatFun Pn1 = A1 + B1 * u + C1 * rf_pow(u, 2);
  auto Q = [&](const RatFun& x) { return D + Ev * x + Kv * rf_pow(x, 2) + Lv * rf_pow(x, 3); };

  const RatFun expr = W * Pn - Pn1 - (W * Q(u - rfc(1)) - V * Q(u));
  if (expr.den().degree_in(Var::k) > 0) {
    rep.residuals.push_back("denominator carries the summation variable");
    rep.pass = false;
    return rep;
  }
  const auto cs = expr.num().coeffs_in(Var::k);
  const long top = std::max<long>(6, static_cast<long>(cs.size()) - 1);
  for (long i = 0; i <= top; ++i) {
    rep.checked.push_back("pair relation, u^" + std::to_string(i));
    if (i < static_cast<long>(cs.size()) && !cs[static_cast<std::size_t>(i)].is_zero())
      rep.residuals.push_back("pair relation, u^" + std::to_string(i));
  }

  rep.checked.push_back("carrier shift");
  const RatFun r12 =
      rfc(2) * Kp - rfc(7) * (n1 + rfc(1)) * Lp - rho(n1) * (rfc(2) * Kv - rfc(7) * n1 * Lv);
  if (!r12.is_zero()) rep.residuals.push_back("carrier shift");

  rep.checked.push_back("closed forms against the order step");
  const RatFun r13 = eq9_lhsL(n1, m) * L2v -
                     eq9_rhs(n1, closed_E(n1, Lv, L2v, Pv), closed_K(n1, Lv, Pv), Lv, m);
  if (!r13.is_zero()) rep.residuals.push_back("closed forms against the order step");

  rep.checked.push_back("closed forms against the D relation");
  const RatFun r14 = eq8_lhsD(n1, m) * closed_D(n1, Lv, L2v, Pv) -
                     eq8_rhs(n1, closed_E(n1, Lv, L2v, Pv), closed_K(n1, Lv, Pv), Lv, m);
  if (!r14.is_zero()) rep.residuals.push_back("closed forms against the D relation");

  rep.pass = rep.residuals.empty();
  return rep;
}

EvalReport sum_G_n0(const InitCond& init, const ParamsE& pe, Precision p, long forced_terms,
                    bool enforce_domain) {
  if (enforce_domain) pe.require_admissible();
  auto seq = std::make_shared<LSequence>(init, pe);
  auto prod = std::make_shared<Rational>(1);
  SumOptions opts;
  opts.digits = p.digits;
  opts.forced_terms = forced_terms;
  return sum_rational_terms(
      "g0",
      [seq, prod, pe](long i) -> Rational {
        const Rational f = sym_factor(pe.e1, pe.e2, i + 1);
        if (f == 0) throw pole_error(i + 1);
        *prod *= f;
        return coeff_state(i, *seq).D / *prod;
      },
      opts);
}

EvalReport sum_diagonal(const InitCond& init, const ParamsE& pe, Precision p, long forced_terms) {
  pe.require_admissible();
  auto seq = std::make_shared<LSequence>(init, pe);
  SumOptions opts;
  opts.digits = p.digits;
  opts.forced_terms = forced_terms;
  return sum_rational_terms(
      "diagonal",
      [seq, pe](long i) -> Rational {
        const CoeffState st = coeff_state(i, *seq);
        return F_eval(i, i, st, pe) + G_eval(i, i + 1, st, pe);
      },
      opts);
}

EvalReport sum_F0(const InitCond& init, const ParamsE& pe, Precision p) {
  pe.require_admissible();
  Rational scale = rat_abs(init.A0) + rat_abs(init.B0) + rat_abs(init.C0);
  EvalReport rep;
  rep.series_id = "f0";
  rep.digits = p.digits;
  if (scale == 0) {
    rep.value = Real(Precision(p.digits));
    rep.tail_bound = Real(Precision(p.digits));
    rep.terms_used = 0;
    return rep;
  }
  long extra = 6;
  while (scale > 1) {
    scale /= 10;
    extra += 1;
  }
  const Precision wp(p.digits + extra);
  const Rational coeffs[3] = {init.A0, init.B0, init.C0};
  Real value(wp), bound(wp);
  long terms = 0;
  for (int pow = 0; pow < 3; ++pow) {
    if (coeffs[pow] == 0) continue;
    const ZetaMixResult zm = zeta_mix(pow, pe, wp);
    value += real_mul_q(zm.value, coeffs[pow]);
    bound += real_mul_q(zm.bound, rat_abs(coeffs[pow]));
    terms = std::max(terms, zm.terms);
  }
  rep.value = value;
  rep.tail_bound = bound + Real::pow10(-(p.digits + 8), wp);
  rep.terms_used = terms;
  return rep;
}

Real sum_F0_direct(const InitCond& init, const ParamsE& pe, long n_terms) {
  pe.require_admissible();
  const double a = Rational(init.A0).get_d();
  const double b = Rational(init.B0).get_d();
  const double c = Rational(init.C0).get_d();
  const double e1 = Rational(pe.e1).get_d();
  const double e2 = Rational(pe.e2).get_d();
  double s_n = 0, s = 0;
  for (long j = 1; j <= 2 * n_terms; ++j) {
    const double j2 = static_cast<double>(j) * static_cast<double>(j);
    s += (a + b * j + c * j2) / (j2 * j2 - e1 * j2 + e2);
    if (j == n_terms) s_n = s;
  }
  return Real(Rational(2 * s - s_n), Precision(15));
}

}  // namespace mwz
