#pragma once
#include "mwz/rational.hpp"

namespace mwz {

// Kernel parameters for the quartic factor m^4 - e1*m^2 + e2.
struct ParamsE {
  Rational e1;
  Rational e2;

  // Both roots of z^2 - e1 z + e2 lie in the open unit disk. The Schur-Cohn
  // conditions |e2| < 1 and |e1| < 1 + e2 cover the real and the complex
  // root pair alike, so the test stays rational.
  bool admissible() const;
  void require_admissible() const;  // domain_error when not
};

// Alternative parameterization: factor (m^2)^2 - x2 m^2 - y4.
struct ParamsXY {
  Rational x2;
  Rational y4;

  bool in_domain() const;  // |x2| + |y4| < 1
  void require_domain() const;
  ParamsE to_e() const;  // e1 = x2, e2 = -y4
};

// Seed coefficients of the order-0 numerator A0 + B0 k + C0 k^2.
struct InitCond {
  Rational A0;
  Rational B0;
  Rational C0;
};

}  // namespace mwz
