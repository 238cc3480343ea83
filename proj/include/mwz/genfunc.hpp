#pragma once
#include <vector>

#include "mwz/mutation.hpp"
#include "mwz/params.hpp"
#include "mwz/real.hpp"
#include "mwz/report.hpp"

namespace mwz {

struct ZetaMixResult {
  Real value;
  Real bound;
  long terms = 0;  // number of expansion blocks taken
};

// sum_{j>=1} j^pow / (j^4 - e1 j^2 + e2) for pow in {0,1,2}. The head below
// J0 = min{J : (|e1|+|e2|)/J^2 <= 1/2} is summed exactly; the tail becomes a
// binomially weighted mix of zeta tails, truncated once the geometric bound
// 2 r^(t+1)/(1-r) with r = (|e1|+|e2|)/J0^2 clears the guard band. Works for
// any parameters that avoid a pole at integer j.
ZetaMixResult zeta_mix(int pow, const ParamsE& pe, Precision p);

// C(n+m, n): weight of x2^n y4^m in the expansion of the bivariate sum.
Rational coeff_weight(long n, long m);

// sum_{k>=1} k / (k^4 - x2 k^2 - y4), |x2| + |y4| < 1.
EvalReport bivariate_lhs(const ParamsXY& xy, Precision p);

// Truncated bivariate Taylor table of the series side: c[i][j] approximates
// the coefficient of x2^i y4^j after n_terms terms; err[i][j] is the
// empirical geometric tail bound for that entry.
struct BiSeries {
  long nx = 0, ny = 0;
  long terms_used = 0;
  std::vector<std::vector<Rational>> c;
  std::vector<std::vector<Real>> err;
};

// Orders above 4 in either variable are refused with budget_error, as is a
// term count above 1000.
BiSeries rhs_taylor(long n_terms, long nx, long ny, const Mutation* m = nullptr);

}  // namespace mwz
