#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mwz/errors.hpp"
#include "mwz/mutation.hpp"
#include "mwz/rational.hpp"
#include "mwz/series.hpp"
#include "mwz/wz.hpp"
#include "mwz/zeta_ref.hpp"

using namespace mwz;

namespace {

const ParamsXY kOrigin{Rational(0), Rational(0)};
const InitCond kMiddle{Rational(0), Rational(1), Rational(0)};

}  // namespace

TEST_CASE("numerator blocks take their frozen values") {
  auto b1 = r_blocks(1);
  CHECK(b1[0] == Rational(77));
  CHECK(b1[1] == Rational(-30));
  CHECK(b1[2] == Rational(1));
  CHECK(b1[3] == Rational(-17));
  CHECK(b1[4] == Rational(1));
  CHECK(r_eval(1, kOrigin) == Rational(77));
  CHECK(r_eval(2, kOrigin) == Rational(8512));
  CHECK(r_eval(1, ParamsXY{Rational(0), Rational(1)}) == Rational(60));
}

TEST_CASE("first series terms are exact") {
  // each closed form evaluated with a single forced term
  EvalReport k4 = koecher_rhs(Rational(1, 4), Precision{20}, 1);
  CHECK(k4.value.agrees_to(Real(Rational(19, 12), Precision{25}), 19));
  EvalReport k0 = koecher_rhs(Rational(0), Precision{20}, 1);
  CHECK(k0.value.agrees_to(Real(Rational(5, 4), Precision{25}), 19));
  EvalReport a16 = ag_rhs(Rational(1, 16), Precision{20}, 1);
  CHECK(a16.value.agrees_to(Real(Rational(4, 3), Precision{25}), 19));
  EvalReport cb0 = cb_rhs(kOrigin, Precision{20}, 1);
  CHECK(cb0.value.agrees_to(Real(Rational(5, 4), Precision{25}), 19));
  CHECK(thm2_term(1, kOrigin) == Rational(77, 64));
  EvalReport z7 = zeta7_series(Precision{20}, 1);
  CHECK(z7.value.agrees_to(Real(Rational(1037, 1024), Precision{25}), 19));
}

TEST_CASE("closed bivariate series hits the odd zeta value at the origin") {
  Precision p{50};
  EvalReport rep = thm2_rhs(kOrigin, p);
  CHECK(rep.value.agrees_to(zeta_reference(3, p), 50));
  CHECK(rep.terms_used <= 25);
}

TEST_CASE("single-variable degenerations agree with the bivariate form") {
  Precision p{30};
  EvalReport k = koecher_rhs(Rational(1, 9), p);
  EvalReport c = cb_rhs(ParamsXY{Rational(1, 9), Rational(0)}, p);
  CHECK(k.value.agrees_to(c.value, 30));
  EvalReport a = ag_rhs(Rational(1, 16), p);
  EvalReport c2 = cb_rhs(ParamsXY{Rational(0), Rational(1, 16)}, p);
  CHECK(a.value.agrees_to(c2.value, 30));
}

TEST_CASE("the degree-9 stream matches the zeta reference") {
  Precision p{30};
  EvalReport rep = zeta7_series(p);
  CHECK(rep.value.agrees_to(zeta_reference(7, p), 30));
}

TEST_CASE("every numerator block coefficient is load-bearing") {
  // the origin only exercises the constant block, so the sweep checks a
  // generic parameter point as well
  Precision p{35};
  Real z3 = zeta_reference(3, p);
  const ParamsXY generic{Rational(1, 9), Rational(1, 16)};
  for (int i = 0; i < 11; ++i) {
    Mutation m{MutTarget::PolyR, i};
    CAPTURE(i);
    bool flipped = false;
    if (thm2_term(1, kOrigin, &m) != Rational(77, 64)) flipped = true;
    if (thm2_term(1, generic, &m) != thm2_term(1, generic)) flipped = true;
    if (thm2_term(2, generic, &m) != thm2_term(2, generic)) flipped = true;
    CHECK(flipped);
  }
  // the three constant-block flips already break the origin evaluation
  for (int i = 0; i < 3; ++i) {
    Mutation m{MutTarget::PolyR, i};
    CAPTURE(i);
    EvalReport rep = thm2_rhs(kOrigin, p, 0, &m);
    CHECK_FALSE(rep.value.agrees_to(z3, 30));
  }
}

TEST_CASE("convergence slopes sit in their measured bands") {
  SeriesSpec thm2spec{"thm2", kOrigin, kMiddle, kOrigin.to_e()};
  ConvergenceProfile pr = convergence_profile(thm2spec, 40);
  CHECK(pr.slope > 2.9);
  CHECK(pr.slope < 3.1);
  CHECK(pr.rows.size() == 40);
  CHECK(pr.rows.front().n == 1);
  CHECK(pr.rows.back().n == 40);

  SeriesSpec shifted{"thm2", ParamsXY{Rational(1, 9), Rational(1, 16)}, kMiddle,
                     ParamsXY{Rational(1, 9), Rational(1, 16)}.to_e()};
  CHECK(convergence_profile(shifted, 30).slope > 2.5);

  SeriesSpec koe{"koecher", kOrigin, kMiddle, kOrigin.to_e()};
  double ks = convergence_profile(koe, 40).slope;
  CHECK(ks > 0.55);
  CHECK(ks < 0.75);

  SeriesSpec t1{"thm1", kOrigin, InitCond{Rational(1), Rational(0), Rational(0)},
                kOrigin.to_e()};
  double ts = convergence_profile(t1, 40).slope;
  CHECK(ts > 0.55);
  CHECK(ts < 0.75);
}

TEST_CASE("profiles reject too-short runs") {
  SeriesSpec spec{"thm2", kOrigin, kMiddle, kOrigin.to_e()};
  CHECK_THROWS_AS(convergence_profile(spec, 11), domain_error);
  CHECK_THROWS_AS(convergence_profile(SeriesSpec{"nope", kOrigin, kMiddle, kOrigin.to_e()}, 20),
                  std::invalid_argument);
}

TEST_CASE("forcing extra terms only sharpens the value") {
  Precision p{30};
  EvalReport base = thm2_rhs(ParamsXY{Rational(1, 9), Rational(1, 16)}, p);
  EvalReport more = thm2_rhs(ParamsXY{Rational(1, 9), Rational(1, 16)}, p, 2 * base.terms_used);
  CHECK(base.value.agrees_to(more.value, 30));
  CHECK(more.tail_bound < base.tail_bound);

  EvalReport kb = koecher_rhs(Rational(1, 4), p);
  EvalReport km = koecher_rhs(Rational(1, 4), p, kb.terms_used + 40);
  CHECK(kb.value.agrees_to(km.value, 30));
}

TEST_CASE("reports keep the tail bound under the requested resolution") {
  Precision p{30};
  for (EvalReport rep :
       {koecher_rhs(Rational(1, 4), p), ag_rhs(Rational(1, 16), p), cb_rhs(kOrigin, p),
        thm2_rhs(kOrigin, p), zeta7_series(p),
        thm1_rhs(kMiddle, ParamsE{Rational(0), Rational(0)}, p)}) {
    CAPTURE(rep.series_id);
    CHECK(rep.digits == 30);
    CHECK(rep.terms_used > 0);
    CHECK(rep.tail_bound < Real::pow10(-30, p));
  }
}

TEST_CASE("domain gates reject out-of-range parameters") {
  Precision p{20};
  CHECK_THROWS_AS(koecher_rhs(Rational(1), p), domain_error);
  CHECK_THROWS_AS(koecher_rhs(Rational(-3, 2), p), domain_error);
  CHECK_THROWS_AS(ag_rhs(Rational(17, 16), p), domain_error);
  CHECK_THROWS_AS(cb_rhs(ParamsXY{Rational(2), Rational(0)}, p), domain_error);
  CHECK_THROWS_AS(thm1_rhs(kMiddle, ParamsE{Rational(2), Rational(0)}, p), domain_error);
  CHECK_THROWS_AS(thm2_term(0, kOrigin), domain_error);
}

TEST_CASE("term streams and report values stay consistent under truncation") {
  // partial sums assembled by hand from exact terms match the forced reports
  Precision p{40};
  Rational acc(0);
  for (long k = 1; k <= 6; ++k) acc += thm2_term(k, kOrigin);
  EvalReport rep = thm2_rhs(kOrigin, p, 6);
  CHECK(rep.value.agrees_to(Real(acc, Precision{45}), 39));
  CHECK(rep.terms_used == 6);
}
