#pragma once
#include "mwz/mutation.hpp"
#include "mwz/params.hpp"
#include "mwz/real.hpp"
#include "mwz/recurrence.hpp"
#include "mwz/report.hpp"

namespace mwz {

// Numerator coefficients of the pair at order n:
//   F(n,k) = H(n,k) (A + B(k+1) + C(k+1)^2)
//   G(n,k) = H(n,k) (D + E k + K k^2 + L k^3)
struct CoeffState {
  long n = 0;
  Rational A, B, C, D, E, K, L;
};

// H(n,k) = 1 / prod_{m=k+1}^{n+k+1} (m^4 - e1 m^2 + e2); n, k >= 0.
Rational kernel_H(long n, long k, const ParamsE& pe);

// State at order n from the closed forms over the L-sequence and carrier.
CoeffState coeff_state(long n, LSequence& seq);

// State at order n by running the coupled forward recursion from order 0.
// Same values as coeff_state by construction; kept as an independent route.
CoeffState coeff_state_forward(long n, LSequence& seq);

Rational F_eval(long n, long k, const CoeffState& st, const ParamsE& pe);
Rational G_eval(long n, long k, const CoeffState& st, const ParamsE& pe);

// Exact pair check on a grid: F(n+1,k) - F(n,k) = G(n,k+1) - G(n,k) for all
// n <= n_max, k <= k_max, plus the order-0 round trip back to the seed.
CertReport certify_numeric(long n_max, long k_max, const InitCond& init, const ParamsE& pe);

// Symbolic certificate: the seven power coefficients of the pair relation in
// the shifted summation variable, plus the three closed-form identities.
CertReport certify_symbolic(const Mutation* m = nullptr);

// sum_{k>=1} (A0 + B0 k + C0 k^2) / (k^4 - e1 k^2 + e2), admissible params.
EvalReport sum_F0(const InitCond& init, const ParamsE& pe, Precision p);

// sum_{n>=0} G(n, 0); telescoped column value, admissible params.
// enforce_domain = false skips the admissibility gate so callers can probe
// the divergent regime on purpose.
EvalReport sum_G_n0(const InitCond& init, const ParamsE& pe, Precision p, long forced_terms = 0,
                    bool enforce_domain = true);

// sum_{n>=0} (F(n,n) + G(n,n+1)); diagonal route to the same value.
EvalReport sum_diagonal(const InitCond& init, const ParamsE& pe, Precision p,
                        long forced_terms = 0);

// Plain partial sums of sum_F0 with a two-point Richardson step; error decays
// like N^-2. Low-precision consistency probe only.
Real sum_F0_direct(const InitCond& init, const ParamsE& pe, long n_terms);

}  // namespace mwz
