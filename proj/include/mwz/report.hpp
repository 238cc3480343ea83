#pragma once
#include <string>
#include <vector>

#include "mwz/real.hpp"

namespace mwz {

// Result of a series evaluation. Invariant on success: tail_bound < 10^-digits.
struct EvalReport {
  std::string series_id;
  Real value;
  Real tail_bound;
  long terms_used = 0;
  long digits = 0;
};

// Result of a certification run. residuals lists whatever failed to vanish
// (empty on pass); checked lists every relation that was examined.
struct CertReport {
  bool pass = false;
  std::string mode;
  std::vector<std::string> checked;
  std::vector<std::string> residuals;
};

}  // namespace mwz
