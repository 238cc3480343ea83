#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mwz/errors.hpp"
#include "mwz/mpoly.hpp"
#include "mwz/mutation.hpp"
#include "mwz/recurrence.hpp"
#include "mwz/wz.hpp"

using namespace mwz;

namespace {

const ParamsE kZero{Rational(0), Rational(0)};

ParamsE random_admissible(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(10, 19);
  while (true) {
    Rational e2(num(rng), den(rng));
    e2.canonicalize();
    Rational e1(num(rng), den(rng));
    e1.canonicalize();
    ParamsE pe{e1, e2};
    if (pe.admissible()) return pe;
  }
}

InitCond random_init(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  auto draw = [&] {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
  };
  return InitCond{draw(), draw(), draw()};
}

}  // namespace

TEST_CASE("first L values for the canonical seeds at the origin") {
  LSequence a({Rational(1), Rational(0), Rational(0)}, kZero);
  CHECK(a.at(0) == Rational(0));
  CHECK(a.at(1) == Rational(1, 3));
  CHECK(a.at(2) == Rational(-4, 9));
  CHECK(a.at(3) == Rational(6));

  LSequence c({Rational(0), Rational(0), Rational(1)}, kZero);
  CHECK(c.at(0) == Rational(1));
  CHECK(c.at(1) == Rational(-1, 30));
}

TEST_CASE("the middle seed keeps the whole L sequence at zero") {
  LSequence seq({Rational(0), Rational(1), Rational(0)}, kZero);
  for (long n = 0; n <= 100; ++n) CHECK(seq.at(n) == Rational(0));
}

TEST_CASE("L1 does not see B0") {
  std::mt19937 rng(3);
  for (int t = 0; t < 5; ++t) {
    ParamsE pe = random_admissible(rng);
    LSequence base({Rational(2), Rational(0), Rational(-3)}, pe);
    LSequence bumped({Rational(2), Rational(17, 3), Rational(-3)}, pe);
    CHECK(base.at(1) == bumped.at(1));
  }
}

TEST_CASE("L is linear in the seed") {
  std::mt19937 rng(5);
  for (int t = 0; t < 4; ++t) {
    ParamsE pe = random_admissible(rng);
    InitCond ic = random_init(rng);
    LSequence mixed(ic, pe);
    LSequence ea({Rational(1), Rational(0), Rational(0)}, pe);
    LSequence eb({Rational(0), Rational(1), Rational(0)}, pe);
    LSequence ec({Rational(0), Rational(0), Rational(1)}, pe);
    for (long n = 0; n <= 20; ++n)
      CHECK(mixed.at(n) == ic.A0 * ea.at(n) + ic.B0 * eb.at(n) + ic.C0 * ec.at(n));
  }
}

TEST_CASE("the stored terms satisfy the three-term relation far out") {
  std::mt19937 rng(7);
  for (const ParamsE& pe : {kZero, random_admissible(rng), random_admissible(rng)}) {
    LSequence seq({Rational(1), Rational(1), Rational(1)}, pe);
    for (long n = 1; n <= 200; ++n) {
      const Rational alpha = 4 * Rational(4 * n + 3) * Rational(4 * n + 5) *
                             (Rational(5 * n * n) - 2 * pe.e1);
      const Rational beta = 2 * Rational(n + 1) * p_eval(n, pe);
      const Rational gamma = -Rational(n) * Rational(n + 1) *
                             (Rational(5 * (n + 1) * (n + 1)) - 2 * pe.e1) * q_eval(n, pe);
      CHECK(alpha * seq.at(n + 1) + beta * seq.at(n) + gamma * seq.at(n - 1) == Rational(0));
    }
  }
}

TEST_CASE("L agrees with the coupled forward recursion route") {
  std::mt19937 rng(9);
  for (int t = 0; t < 3; ++t) {
    ParamsE pe = random_admissible(rng);
    InitCond ic = random_init(rng);
    LSequence seq(ic, pe);
    for (long n = 0; n <= 25; ++n) {
      CoeffState st = coeff_state_forward(n, seq);
      CHECK(st.L == seq.at(n));
    }
  }
}

TEST_CASE("p at the origin factors as printed") {
  MultiPoly p0 = p_poly();
  Point origin{};
  for (auto& x : origin) x = Rational(0);
  // kill e1, e2 by substitution, then compare against 5n^2(n+1)^2(6n^3+9n^2+5n+1)
  MultiPoly zero = MultiPoly::constant(Rational(0));
  MultiPoly p00 = p0.subst(Var::e1, zero).subst(Var::e2, zero);
  MultiPoly vn = MultiPoly::variable(Var::n);
  MultiPoly np1 = vn + MultiPoly::constant(Rational(1));
  MultiPoly cubic = vn * vn * vn * Rational(6) + vn * vn * Rational(9) + vn * Rational(5) +
                    MultiPoly::constant(Rational(1));
  CHECK(p00 == vn * vn * Rational(5) * (np1 * np1) * cubic);
  CHECK(p_eval(1, kZero) == Rational(420));
}

TEST_CASE("q at the origin is the pure eighth power") {
  MultiPoly q0 = q_poly();
  MultiPoly zero = MultiPoly::constant(Rational(0));
  MultiPoly q00 = q0.subst(Var::e1, zero).subst(Var::e2, zero);
  MultiPoly vn = MultiPoly::variable(Var::n);
  CHECK(q00 == poly_pow(vn, 8));
  CHECK(q_eval(1, ParamsE{Rational(1), Rational(0)}) == Rational(0));
  CHECK(q_eval(2, kZero) == Rational(256));
}

TEST_CASE("d coefficients reproduce the worked examples") {
  LSequence a({Rational(1), Rational(0), Rational(0)}, kZero);
  CHECK(d_coeff(1, a) == Rational(5, 6));
  CHECK(d_coeff(2, a) == Rational(25, 6));
  CHECK(d_coeff(3, a) == Rational(-50, 3));

  LSequence b({Rational(0), Rational(1), Rational(0)}, kZero);
  CHECK(d_coeff(2, b) == Rational(-5, 6));
  CHECK_THROWS_AS(d_coeff(0, b), domain_error);
}

TEST_CASE("d matches the closed-form state shifted by one") {
  std::mt19937 rng(11);
  ParamsE pe = random_admissible(rng);
  InitCond ic = random_init(rng);
  LSequence seq(ic, pe);
  for (long n = 1; n <= 15; ++n) CHECK(d_coeff(n, seq) == coeff_state(n - 1, seq).D);
}

TEST_CASE("carrier steps by the printed ratio") {
  std::mt19937 rng(13);
  ParamsE pe = random_admissible(rng);
  LSequence seq({Rational(0), Rational(1), Rational(0)}, pe);
  for (long n = 0; n <= 12; ++n) {
    const long n1 = n + 1;
    const Rational n1q(n1);
    Rational rho = -n1q * ((n1q * n1q - pe.e1) * (n1q * n1q - pe.e1) - 4 * pe.e2) /
                   (2 * Rational(2 * n1 + 1));
    CHECK(seq.carrier(n + 1) == seq.carrier(n) * rho);
  }
  CHECK(seq.carrier(0) == Rational(1, 2));  // 2 B0 core(1) = 2 * 1 * 1/4
}

TEST_CASE("growth rate estimate sits in the expected band") {
  LSequence a({Rational(1), Rational(0), Rational(0)}, kZero);
  Real ra = ratio_estimate(a, 300, Precision{20});
  CHECK(ra.to_double() > 0.20);
  CHECK(ra.to_double() < 0.26);

  LSequence c({Rational(0), Rational(0), Rational(1)}, kZero);
  Real rc = ratio_estimate(c, 300, Precision{20});
  CHECK(rc.to_double() > 0.20);
  CHECK(rc.to_double() < 0.26);

  LSequence b({Rational(0), Rational(1), Rational(0)}, kZero);
  CHECK_THROWS_AS(ratio_estimate(b, 300, Precision{20}), domain_error);
  CHECK_THROWS_AS(ratio_estimate(a, 5, Precision{20}), domain_error);
}

TEST_CASE("the derivation reproduces the printed recurrence") {
  DeriveResult r = derive_l_recurrence();
  CHECK(r.pass);
  CHECK(r.carrier_cancels);
  CHECK(r.residuals.empty());
  // normalized coefficients are exactly the printed ones
  MultiPoly vn = MultiPoly::variable(Var::n);
  MultiPoly ve1 = MultiPoly::variable(Var::e1);
  MultiPoly alpha_p = (vn * Rational(4) + MultiPoly::constant(Rational(3))) *
                      (vn * Rational(4) + MultiPoly::constant(Rational(5))) *
                      (vn * vn * Rational(5) - ve1 * Rational(2)) * Rational(4);
  CHECK(r.alpha == alpha_p);
  MultiPoly np1 = vn + MultiPoly::constant(Rational(1));
  CHECK(r.beta == np1 * Rational(2) * p_poly());
  CHECK(r.gamma == -(vn * np1) * ((np1 * np1) * Rational(5) - ve1 * Rational(2)) * q_poly());
}

TEST_CASE("every numerator monomial is load-bearing for the derivation") {
  for (int i = 0; i < 24; ++i) {
    Mutation m{MutTarget::PolyP, i};
    CAPTURE(i);
    CHECK_FALSE(derive_l_recurrence(&m).pass);
  }
  for (int i = 0; i < 8; ++i) {
    Mutation m{MutTarget::PolyQ, i};
    CAPTURE(i);
    CHECK_FALSE(derive_l_recurrence(&m).pass);
  }
}

TEST_CASE("leading coefficient zeros are reported, not divided through") {
  // 5n^2 = 2 e1 at n = 1 makes the order-1 step degenerate
  LSequence seq({Rational(1), Rational(1), Rational(1)}, ParamsE{Rational(5, 2), Rational(0)});
  CHECK_THROWS_AS(seq.at(2), domain_error);
}
