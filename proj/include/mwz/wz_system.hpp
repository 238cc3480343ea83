#pragma once
#include "mwz/mpoly.hpp"
#include "mwz/mutation.hpp"

namespace mwz {

// The coupled coefficient system of the certificate pair, stated over the
// symbolic alphabet. Every function takes the shifted order n1 = n + 1 as an
// argument so the same tables serve the order-n and order-(n+1) instances.
// E, K, L stand for the free numerator coefficients at order n.
//
// Relations (brackets name the mutation slots):
//   C(n)  = [0](4n1-3) L
//   B(n)  = [1](4n1-2) K - [2](10n1^2-3) L
//   A(n)  = [0](4n1-1) E - [1](10n1^2-1) K + [2](20n1^3+2n1*e1-1) L
//   [0]4 D(n) = [1]10n1 E - [2](20n1^2+2e1) K + [3](35n1^3+11n1*e1) L
//   [0]2(4n1+1) L(n+1) = [1]2n1(5n1^2-2e1) E - [2]2n1^2(15n1^2-6e1) K
//                        + [3]n1(63n1^4-17n1^2*e1-4(e1^2-2e2)) L
//   [0]2(4n1+2) K(n+1) - [1]2(10n1^2+20n1+7) L(n+1) =
//       [2]2n1^2(5n1^2-2e1) E - [3]2(16n1^5-8n1^3*e1+n1(e1^2-4e2)) K
//       + [4](70n1^6-31n1^4*e1+n1^2(3(e1^2-2e2)-14e2)) L
//   [0]4(4n1+3) E(n+1) - [1]4(10n1^2+20n1+9) K(n+1)
//       + [2]4(20(n1+1)^3+2(n1+1)e1-1) L(n+1) =
//       [3](6n1^5-6n1^3*e1+16e2*n1) E - [4](20n1^6-22n1^4*e1+2n1^2(e1^2+20e2)) K
//       + [5](45n1^7-48n1^5*e1+n1^3(3e1^2+80e2)+8e1*e2*n1) L
namespace wzsys {

RatFun eq6_C(const RatFun& n1, const RatFun& L, const Mutation* m = nullptr);
RatFun eq6_B(const RatFun& n1, const RatFun& K, const RatFun& L, const Mutation* m = nullptr);
RatFun eq7_A(const RatFun& n1, const RatFun& E, const RatFun& K, const RatFun& L,
             const Mutation* m = nullptr);

RatFun eq8_lhsD(const RatFun& n1, const Mutation* m = nullptr);
RatFun eq8_rhs(const RatFun& n1, const RatFun& E, const RatFun& K, const RatFun& L,
               const Mutation* m = nullptr);
RatFun eq8_D(const RatFun& n1, const RatFun& E, const RatFun& K, const RatFun& L,
             const Mutation* m = nullptr);

RatFun eq9_lhsL(const RatFun& n1, const Mutation* m = nullptr);
RatFun eq9_rhs(const RatFun& n1, const RatFun& E, const RatFun& K, const RatFun& L,
               const Mutation* m = nullptr);
RatFun eq9_Lnext(const RatFun& n1, const RatFun& E, const RatFun& K, const RatFun& L,
                 const Mutation* m = nullptr);

RatFun eq10_lhsK(const RatFun& n1, const Mutation* m = nullptr);
RatFun eq10_lhsL(const RatFun& n1, const Mutation* m = nullptr);
RatFun eq10_rhs(const RatFun& n1, const RatFun& E, const RatFun& K, const RatFun& L,
                const Mutation* m = nullptr);
RatFun eq10_Knext(const RatFun& n1, const RatFun& E, const RatFun& K, const RatFun& L,
                  const RatFun& Lnext, const Mutation* m = nullptr);

RatFun eq11_lhsE(const RatFun& n1, const Mutation* m = nullptr);
RatFun eq11_lhsK(const RatFun& n1, const Mutation* m = nullptr);
RatFun eq11_lhsL(const RatFun& n1, const Mutation* m = nullptr);
RatFun eq11_rhs(const RatFun& n1, const RatFun& E, const RatFun& K, const RatFun& L,
                const Mutation* m = nullptr);
RatFun eq11_Enext(const RatFun& n1, const RatFun& E, const RatFun& K, const RatFun& L,
                  const RatFun& Knext, const RatFun& Lnext, const Mutation* m = nullptr);

// Product-form carrier: P(n+1) = rho(n1) P(n) with
//   rho = -n1((n1^2-e1)^2 - 4e2) / (2(2n1+1)).
RatFun rho(const RatFun& n1);

// Closed forms that decouple K, E, D from the forward recursion:
//   K(n) = (7/2) n1 L(n) + P(n)
//   E(n) = (4n1+1) L(n+1) / (n1(5n1^2-2e1))
//          + (42n1^4-25n1^2*e1+4(e1^2-2e2)) L(n) / (2(5n1^2-2e1)) + 3n1 P(n)
//   D(n) = ((40n1+10) L(n+1) + (35n1^5-35n1^3*e1+4n1(3e1^2-10e2)) L(n))
//          / (4(5n1^2-2e1)) + P(n)(5n1^2-e1)/2
RatFun closed_K(const RatFun& n1, const RatFun& L, const RatFun& P);
RatFun closed_E(const RatFun& n1, const RatFun& L, const RatFun& Lnext, const RatFun& P);
RatFun closed_D(const RatFun& n1, const RatFun& L, const RatFun& Lnext, const RatFun& P);

}  // namespace wzsys
}  // namespace mwz
