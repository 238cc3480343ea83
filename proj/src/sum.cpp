#include "mwz/sum.hpp"

#include <algorithm>

#include "mwz/errors.hpp"

namespace mwz {

EvalReport sum_rational_terms(const std::string& id,
                              const std::function<Rational(long)>& term,
                              const SumOptions& opts) {
  const Precision wp(opts.digits + 10);
  const Real target = Real::pow10(-(opts.digits + 5), wp);

  Real acc(wp);
  Rational prev_abs(0);
  bool have_prev = false;
  double window[10];
  int win_len = 0, win_pos = 0;
  long stall = 0, zero_run = 0;

  EvalReport rep;
  rep.series_id = id;
  rep.digits = opts.digits;
  rep.tail_bound = Real(wp);
  bool bounded = false;

  auto tail_bound = [&](const Rational& last_abs) {
    double rho = 0.0;
    for (int j = 0; j < win_len; ++j) rho = std::max(rho, window[j]);
    double r = rho >= 0.45 ? 0.9 : 2.0 * rho;
    if (win_len == 0) r = 0.9;
    const Rational rq(r);  // exact binary value of the empirical cap
    return real_mul_q(Real(last_abs, wp), rq / (1 - rq));
  };

  for (long i = 0; i < opts.max_terms; ++i) {
    const Rational t = term(i);
    acc += Real(t, wp);
    rep.terms_used = i + 1;
    const Rational ta = rat_abs(t);

    if (have_prev && prev_abs != 0 && ta != 0) {
      const double r = Rational(ta / prev_abs).get_d();
      window[win_pos] = r;
      win_pos = (win_pos + 1) % 10;
      win_len = std::min(win_len + 1, 10);
      stall = r > 0.92 ? stall + 1 : 0;
      if (stall >= 50) throw divergence_error("series '" + id + "' shows no geometric decay");
    }
    zero_run = ta == 0 ? zero_run + 1 : 0;
    prev_abs = ta;
    have_prev = true;

    if (opts.forced_terms > 0) {
      if (i + 1 == opts.forced_terms) {
        rep.tail_bound = zero_run >= 20 ? Real(wp) : tail_bound(ta);
        bounded = true;
        break;
      }
      continue;
    }
    if (i + 1 < opts.min_terms) continue;
    if (zero_run >= 20) {
      rep.tail_bound = Real(wp);
      bounded = true;
      break;
    }
    if (win_len >= 5) {
      Real b = tail_bound(ta);
      if (b < target) {
        rep.tail_bound = b;
        bounded = true;
        break;
      }
    }
  }
  if (!bounded) throw budget_error("series '" + id + "' did not converge within the term budget");
  rep.value = acc;
  return rep;
}

}  // namespace mwz
