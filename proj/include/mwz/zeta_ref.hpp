#pragma once
#include "mwz/rational.hpp"
#include "mwz/real.hpp"

namespace mwz {

// B_n with B_1 = -1/2; values are cached process-wide.
Rational bernoulli(unsigned long n);

// zeta(s) for integer s >= 2 via Euler-Maclaurin with the tail length chosen
// so the first omitted correction term sits below the guard band. Values are
// cached per (s, digits).
Real zeta_reference(long s, Precision p);

}  // namespace mwz
