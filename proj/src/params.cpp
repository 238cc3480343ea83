#include "mwz/params.hpp"

#include "mwz/errors.hpp"

namespace mwz {

bool ParamsE::admissible() const {
  return rat_abs(e2) < 1 && rat_abs(e1) < 1 + e2;
}

void ParamsE::require_admissible() const {
  if (!admissible())
    throw domain_error("parameters (" + rat_string(e1) + ", " + rat_string(e2) +
                       ") are outside the admissible region |e2| < 1, |e1| < 1 + e2");
}

bool ParamsXY::in_domain() const {
  return rat_abs(x2) + rat_abs(y4) < 1;
}

void ParamsXY::require_domain() const {
  if (!in_domain())
    throw domain_error("parameters (" + rat_string(x2) + ", " + rat_string(y4) +
                       ") violate |x2| + |y4| < 1");
}

ParamsE ParamsXY::to_e() const {
  return ParamsE{x2, -y4};
}

}  // namespace mwz
