#pragma once
#include <functional>
#include <string>

#include "mwz/rational.hpp"
#include "mwz/real.hpp"
#include "mwz/report.hpp"

namespace mwz {

struct SumOptions {
  long digits = 30;
  long min_terms = 12;
  long forced_terms = 0;  // > 0: evaluate exactly this many terms
  long max_terms = 500000;
};

// Drives a series with an (empirically) geometric tail: terms come in exact,
// accumulate in a real carrying ten digits beyond the request, and the sum
// stops once |t_n| * r/(1-r) with r = min(2 * max(last ratios), 0.9) clears
// 10^-(digits+5). Fifty consecutive ratios above 0.92 raise divergence_error;
// exhausting max_terms raises budget_error. term(i) is called with
// consecutive i starting at 0, so closures may carry incremental state.
EvalReport sum_rational_terms(const std::string& id,
                              const std::function<Rational(long)>& term,
                              const SumOptions& opts);

}  // namespace mwz
