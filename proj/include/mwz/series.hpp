#pragma once
#include <array>
#include <string>
#include <vector>

#include "mwz/mutation.hpp"
#include "mwz/params.hpp"
#include "mwz/real.hpp"
#include "mwz/recurrence.hpp"
#include "mwz/report.hpp"

namespace mwz {

// Numerator polynomial of the closed bivariate series, split by parameter
// monomial: r(n) = b[0] + b[1] x2 + b[2] x2^2 + b[3] y4 + b[4] x2 y4 with
//   b[0] = 205n^6 - 160n^5 + 32n^4     b[1] = -62n^4 + 40n^3 - 8n^2
//   b[2] = n^2                         b[3] = -25n^2 + 10n - 2
//   b[4] = 1
std::array<Rational, 5> r_blocks(long n, const Mutation* m = nullptr);
Rational r_eval(long n, const ParamsXY& xy, const Mutation* m = nullptr);

// One term of the closed bivariate series, k >= 1.
Rational thm2_term(long k, const ParamsXY& xy, const Mutation* m = nullptr);

// d_n / prod_{m=1}^{n} (m^4 - e1 m^2 + e2), n >= 1.
Rational thm1_term(long n, LSequence& seq);

// Series evaluators. forced_terms > 0 pins the number of terms (the tail
// bound is still reported); the default lets the driver stop on its own.
EvalReport koecher_rhs(const Rational& x2, Precision p, long forced_terms = 0);  // |x2| < 1
EvalReport ag_rhs(const Rational& y4, Precision p, long forced_terms = 0);       // |y4| < 1
EvalReport cb_rhs(const ParamsXY& xy, Precision p, long forced_terms = 0);
EvalReport thm2_rhs(const ParamsXY& xy, Precision p, long forced_terms = 0,
                    const Mutation* m = nullptr);
EvalReport thm1_rhs(const InitCond& init, const ParamsE& pe, Precision p, long forced_terms = 0,
                    bool enforce_domain = true);
EvalReport zeta7_series(Precision p, long forced_terms = 0);

struct ProfileRow {
  long n = 0;
  Real partial;
  Real abs_err;
  double digits_gained = 0;
  double cum_digits = 0;
};

struct ConvergenceProfile {
  std::string series_id;
  long n_max = 0;
  long ref_digits = 0;
  double slope = 0;  // least-squares digits-per-term over n in [10, n_max]
  std::vector<ProfileRow> rows;
};

// Which series to profile; each id reads the fields it needs.
struct SeriesSpec {
  std::string id;  // koecher | ag | cb | thm2 | thm1 | zeta7
  ParamsXY xy{Rational(0), Rational(0)};
  InitCond init{Rational(0), Rational(0), Rational(0)};
  ParamsE pe{Rational(0), Rational(0)};
};

// Partial sums against a reference computed by an independent route (the
// parameterized zeta expansion, or the zeta reference for zeta7) at a
// precision scaled to the expected terminal accuracy, so the error column
// never saturates. n_max >= 12.
ConvergenceProfile convergence_profile(const SeriesSpec& spec, long n_max);

}  // namespace mwz
