#pragma once
#include <vector>

#include "mwz/mpoly.hpp"
#include "mwz/mutation.hpp"
#include "mwz/params.hpp"
#include "mwz/real.hpp"

namespace mwz {

// Coefficient polynomials of the three-term recurrence
//   4(4n+3)(4n+5)(5n^2-2e1) L(n+1) + 2(n+1) p(n) L(n)
//     - n(n+1)(5(n+1)^2-2e1) q(n) L(n-1) = 0,  n >= 1,
// as polynomials in {n, e1, e2}.
MultiPoly p_poly(const Mutation* m = nullptr);
MultiPoly q_poly(const Mutation* m = nullptr);
Rational p_eval(long n, const ParamsE& pe);
Rational q_eval(long n, const ParamsE& pe);

// L(n) driven forward from L(0) = C0 and
//   L(1) = (1/3 - (2/15)e1) A0 + (e1/6 - (2/15)(e1^2 - 6e2) - 1/30) C0.
// Also owns the product core used by the closed forms:
//   core(1) = 1/4,  core(n+1) = core(n) * (-n)((n^2-e1)^2-4e2) / (2(2n+1)),
// with carrier values P(n) = 2 B0 core(n+1).
class LSequence {
 public:
  LSequence(InitCond init, ParamsE params);

  Rational at(long n);    // n >= 0
  Rational core(long n);  // n >= 1
  Rational carrier(long n);      // P(n), n >= 0

  const InitCond& init() const { return init_; }
  const ParamsE& params() const { return params_; }

 private:
  InitCond init_;
  ParamsE params_;
  std::vector<Rational> l_;
  std::vector<Rational> core_;
};

// n-th numerator coefficient of the collapsed single sum, n >= 1.
Rational d_coeff(long n, LSequence& seq);

// |L(n)|^(1/n) / (n!)^(4/n); growth-rate probe, n >= 10.
Real ratio_estimate(LSequence& seq, long n, Precision p = Precision(20));

struct DeriveResult {
  bool pass = false;
  bool carrier_cancels = false;
  // recurrence triple recovered from the coefficient system, normalized by
  // the common polynomial factor: alpha L(n+1) + beta L(n) + gamma L(n-1) = 0
  MultiPoly alpha, beta, gamma;
  std::vector<std::string> residuals;
};

// Eliminates K and E from the order-coupling relation via the closed forms
// and checks that the resulting pure-L relation is the printed recurrence
// times a common polynomial factor.
DeriveResult derive_l_recurrence(const Mutation* m = nullptr);

}  // namespace mwz
