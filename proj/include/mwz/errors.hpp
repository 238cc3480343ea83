#pragma once
#include <stdexcept>
#include <string>

namespace mwz {

// Error taxonomy. The CLI maps these onto exit codes:
// parse problems -> 1, domain/pole/budget -> 2, divergence -> 3.
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct pole_error : domain_error {
  long index;
  explicit pole_error(long m)
      : domain_error("factor m^4 - e1*m^2 + e2 vanishes at m = " + std::to_string(m)),
        index(m) {}
};

struct divergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mwz
