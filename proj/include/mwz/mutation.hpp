#pragma once

namespace mwz {

// Sensitivity probe: flips the sign of one printed coefficient in one of the
// structure relations or coefficient polynomials. Used by tests to show that
// the certification and cross-checks actually depend on every coefficient.
enum class MutTarget {
  None,
  Eq6,    // 3 coefficients
  Eq7,    // 3
  Eq8,    // 4
  Eq9,    // 4
  Eq10,   // 5
  Eq11,   // 6
  PolyP,  // 24 monomials
  PolyQ,  // 8 monomials
  PolyR,  // 11 monomials
};

struct Mutation {
  MutTarget target = MutTarget::None;
  int index = 0;
};

inline bool mut_hits(const Mutation* m, MutTarget t, int index) {
  return m != nullptr && m->target == t && m->index == index;
}

}  // namespace mwz
