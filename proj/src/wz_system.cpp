#include "mwz/wz_system.hpp"

namespace mwz {
namespace wzsys {
namespace {

RatFun rf(long v) { return RatFun(Rational(v)); }
RatFun rfq(long num, long den) { return RatFun(Rational(num, den)); }

RatFun pw(const RatFun& f, unsigned e) {
  RatFun r = rf(1);
  for (unsigned i = 0; i < e; ++i) r *= f;
  return r;
}

RatFun ve1() { return RatFun::variable(Var::e1); }
RatFun ve2() { return RatFun::variable(Var::e2); }

RatFun mc(const Mutation* m, MutTarget t, int idx, RatFun c) {
  return mut_hits(m, t, idx) ? -c : c;
}

}  // namespace

RatFun eq6_C(const RatFun& n1, const RatFun& L, const Mutation* m) {
  return mc(m, MutTarget::Eq6, 0, rf(4) * n1 - rf(3)) * L;
}

RatFun eq6_B(const RatFun& n1, const RatFun& K, const RatFun& L, const Mutation* m) {
  return mc(m, MutTarget::Eq6, 1, rf(4) * n1 - rf(2)) * K -
         mc(m, MutTarget::Eq6, 2, rf(10) * pw(n1, 2) - rf(3)) * L;
}

RatFun eq7_A(const RatFun& n1, const RatFun& E, const RatFun& K, const RatFun& L,
             const Mutation* m) {
  return mc(m, MutTarget::Eq7, 0, rf(4) * n1 - rf(1)) * E -
         mc(m, MutTarget::Eq7, 1, rf(10) * pw(n1, 2) - rf(1)) * K +
         mc(m, MutTarget::Eq7, 2, rf(20) * pw(n1, 3) + rf(2) * n1 * ve1() - rf(1)) * L;
}

RatFun eq8_lhsD(const RatFun& n1, const Mutation* m) {
  (void)n1;
  return mc(m, MutTarget::Eq8, 0, rf(4));
}

RatFun eq8_rhs(const RatFun& n1, const RatFun& E, const RatFun& K, const RatFun& L,
               const Mutation* m) {
  return mc(m, MutTarget::Eq8, 1, rf(10) * n1) * E -
         mc(m, MutTarget::Eq8, 2, rf(20) * pw(n1, 2) + rf(2) * ve1()) * K +
         mc(m, MutTarget::Eq8, 3, rf(35) * pw(n1, 3) + rf(11) * n1 * ve1()) * L;
}

RatFun eq8_D(const RatFun& n1, const RatFun& E, const RatFun& K, const RatFun& L,
             const Mutation* m) {
  return eq8_rhs(n1, E, K, L, m) / eq8_lhsD(n1, m);
}

RatFun eq9_lhsL(const RatFun& n1, const Mutation* m) {
  return mc(m, MutTarget::Eq9, 0, rf(2) * (rf(4) * n1 + rf(1)));
}

RatFun eq9_rhs(const RatFun& n1, const RatFun& E, const RatFun& K, const RatFun& L,
               const Mutation* m) {
  const RatFun e1 = ve1(), e2 = ve2();
  return mc(m, MutTarget::Eq9, 1, rf(2) * n1 * (rf(5) * pw(n1, 2) - rf(2) * e1)) * E -
         mc(m, MutTarget::Eq9, 2, rf(2) * pw(n1, 2) * (rf(15) * pw(n1, 2) - rf(6) * e1)) * K +
         mc(m, MutTarget::Eq9, 3,
            n1 * (rf(63) * pw(n1, 4) - rf(17) * pw(n1, 2) * e1 -
                  rf(4) * (pw(e1, 2) - rf(2) * e2))) *
             L;
}

RatFun eq9_Lnext(const RatFun& n1, const RatFun& E, const RatFun& K, const RatFun& L,
                 const Mutation* m) {
  return eq9_rhs(n1, E, K, L, m) / eq9_lhsL(n1, m);
}

RatFun eq10_lhsK(const RatFun& n1, const Mutation* m) {
  return mc(m, MutTarget::Eq10, 0, rf(2) * (rf(4) * n1 + rf(2)));
}

RatFun eq10_lhsL(const RatFun& n1, const Mutation* m) {
  return mc(m, MutTarget::Eq10, 1, rf(2) * (rf(10) * pw(n1, 2) + rf(20) * n1 + rf(7)));
}

RatFun eq10_rhs(const RatFun& n1, const RatFun& E, const RatFun& K, const RatFun& L,
                const Mutation* m) {
  const RatFun e1 = ve1(), e2 = ve2();
  return mc(m, MutTarget::Eq10, 2, rf(2) * pw(n1, 2) * (rf(5) * pw(n1, 2) - rf(2) * e1)) * E -
         mc(m, MutTarget::Eq10, 3,
            rf(2) * (rf(16) * pw(n1, 5) - rf(8) * pw(n1, 3) * e1 +
                     n1 * (pw(e1, 2) - rf(4) * e2))) *
             K +
         mc(m, MutTarget::Eq10, 4,
            rf(70) * pw(n1, 6) - rf(31) * pw(n1, 4) * e1 +
                pw(n1, 2) * (rf(3) * (pw(e1, 2) - rf(2) * e2) - rf(14) * e2)) *
             L;
}

RatFun eq10_Knext(const RatFun& n1, const RatFun& E, const RatFun& K, const RatFun& L,
                  const RatFun& Lnext, const Mutation* m) {
  return (eq10_rhs(n1, E, K, L, m) + eq10_lhsL(n1, m) * Lnext) / eq10_lhsK(n1, m);
}

RatFun eq11_lhsE(const RatFun& n1, const Mutation* m) {
  return mc(m, MutTarget::Eq11, 0, rf(4) * (rf(4) * n1 + rf(3)));
}

RatFun eq11_lhsK(const RatFun& n1, const Mutation* m) {
  return mc(m, MutTarget::Eq11, 1, rf(4) * (rf(10) * pw(n1, 2) + rf(20) * n1 + rf(9)));
}

RatFun eq11_lhsL(const RatFun& n1, const Mutation* m) {
  const RatFun n2 = n1 + rf(1);
  return mc(m, MutTarget::Eq11, 2, rf(4) * (rf(20) * pw(n2, 3) + rf(2) * n2 * ve1() - rf(1)));
}

RatFun eq11_rhs(const RatFun& n1, const RatFun& E, const RatFun& K, const RatFun& L,
                const Mutation* m) {
  const RatFun e1 = ve1(), e2 = ve2();
  return mc(m, MutTarget::Eq11, 3,
            rf(6) * pw(n1, 5) - rf(6) * pw(n1, 3) * e1 + rf(16) * e2 * n1) *
             E -
         mc(m, MutTarget::Eq11, 4,
            rf(20) * pw(n1, 6) - rf(22) * pw(n1, 4) * e1 +
                rf(2) * pw(n1, 2) * (pw(e1, 2) + rf(20) * e2)) *
             K +
         mc(m, MutTarget::Eq11, 5,
            rf(45) * pw(n1, 7) - rf(48) * pw(n1, 5) * e1 +
                pw(n1, 3) * (rf(3) * pw(e1, 2) + rf(80) * e2) + rf(8) * e1 * e2 * n1) *
             L;
}

RatFun eq11_Enext(const RatFun& n1, const RatFun& E, const RatFun& K, const RatFun& L,
                  const RatFun& Knext, const RatFun& Lnext, const Mutation* m) {
  return (eq11_rhs(n1, E, K, L, m) + eq11_lhsK(n1, m) * Knext - eq11_lhsL(n1, m) * Lnext) /
         eq11_lhsE(n1, m);
}

RatFun rho(const RatFun& n1) {
  return -n1 * (pw(pw(n1, 2) - ve1(), 2) - rf(4) * ve2()) / (rf(2) * (rf(2) * n1 + rf(1)));
}

RatFun closed_K(const RatFun& n1, const RatFun& L, const RatFun& P) {
  return rfq(7, 2) * n1 * L + P;
}

RatFun closed_E(const RatFun& n1, const RatFun& L, const RatFun& Lnext, const RatFun& P) {
  const RatFun e1 = ve1(), e2 = ve2();
  const RatFun s = rf(5) * pw(n1, 2) - rf(2) * e1;
  return (rf(4) * n1 + rf(1)) * Lnext / (n1 * s) +
         (rf(42) * pw(n1, 4) - rf(25) * pw(n1, 2) * e1 + rf(4) * (pw(e1, 2) - rf(2) * e2)) * L /
             (rf(2) * s) +
         rf(3) * n1 * P;
}

RatFun closed_D(const RatFun& n1, const RatFun& L, const RatFun& Lnext, const RatFun& P) {
  const RatFun e1 = ve1(), e2 = ve2();
  const RatFun s = rf(5) * pw(n1, 2) - rf(2) * e1;
  return ((rf(40) * n1 + rf(10)) * Lnext +
          (rf(35) * pw(n1, 5) - rf(35) * pw(n1, 3) * e1 +
           rf(4) * n1 * (rf(3) * pw(e1, 2) - rf(10) * e2)) *
              L) /
             (rf(4) * s) +
         P * (rf(5) * pw(n1, 2) - e1) / rf(2);
}

}  // namespace wzsys
}  // namespace mwz
