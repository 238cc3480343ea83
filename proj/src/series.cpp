#include "mwz/series.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>

#include "mwz/errors.hpp"
#include "mwz/genfunc.hpp"
#include "mwz/sum.hpp"
#include "mwz/wz.hpp"
#include "mwz/zeta_ref.hpp"

namespace mwz {

namespace {

Rational sgn_of(const Mutation* m, MutTarget t, int idx, long c) {
  return Rational(mut_hits(m, t, idx) ? -c : c);
}

// C(2k,k) stepped from C(2(k-1),k-1)
void binc_step(Integer& b, long k) {
  b *= 2 * (2 * k - 1);
  mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(k));
}

struct Stream {
  std::function<Rational(long)> term;             // i = 0, 1, ... consecutively
  std::function<Real(Precision)> reference;       // independent route
};

}  // namespace

std::array<Rational, 5> r_blocks(long n, const Mutation* m) {
  const Rational nq(n);
  const Rational n2 = nq * nq, n3 = n2 * nq, n4 = n2 * n2;
  std::array<Rational, 5> b;
  b[0] = sgn_of(m, MutTarget::PolyR, 0, 205) * n4 * n2 +
         sgn_of(m, MutTarget::PolyR, 1, -160) * n4 * nq +
         sgn_of(m, MutTarget::PolyR, 2, 32) * n4;
  b[1] = sgn_of(m, MutTarget::PolyR, 3, -62) * n4 + sgn_of(m, MutTarget::PolyR, 4, 40) * n3 +
         sgn_of(m, MutTarget::PolyR, 5, -8) * n2;
  b[2] = sgn_of(m, MutTarget::PolyR, 6, 1) * n2;
  b[3] = sgn_of(m, MutTarget::PolyR, 7, -25) * n2 + sgn_of(m, MutTarget::PolyR, 8, 10) * nq +
         sgn_of(m, MutTarget::PolyR, 9, -2);
  b[4] = sgn_of(m, MutTarget::PolyR, 10, 1);
  return b;
}

Rational r_eval(long n, const ParamsXY& xy, const Mutation* m) {
  const auto b = r_blocks(n, m);
  return b[0] + b[1] * xy.x2 + b[2] * xy.x2 * xy.x2 + b[3] * xy.y4 + b[4] * xy.x2 * xy.y4;
}

Rational thm2_term(long k, const ParamsXY& xy, const Mutation* m) {
  if (k < 1) throw domain_error("thm2_term needs k >= 1");
  Rational numprod(1), denprod(1);
  for (long j = 1; j < k; ++j) {
    const Rational j2(j * j);
    numprod *= (j2 - xy.x2) * (j2 - xy.x2) + 4 * xy.y4;
  }
  for (long j = k; j <= 2 * k; ++j) {
    const Rational j2(j * j);
    denprod *= j2 * j2 - xy.x2 * j2 - xy.y4;
  }
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(2 * k), static_cast<unsigned long>(k));
  const long sign = k % 2 == 1 ? 1 : -1;
  return Rational(sign) * r_eval(k, xy, m) * numprod / (2 * k * Rational(b) * denprod);
}

Rational thm1_term(long n, LSequence& seq) {
  if (n < 1) throw domain_error("thm1_term needs n >= 1");
  return d_coeff(n, seq) / sym_product(seq.params().e1, seq.params().e2, 1, n);
}

namespace {

std::function<Rational(long)> koecher_stream(const Rational& x2) {
  struct State {
    Rational x2, prod{1};
    Integer binc{1};
    long k = 0;
    int sign = -1;
  };
  auto st = std::make_shared<State>();
  st->x2 = x2;
  return [st](long i) -> Rational {
    (void)i;
    ++st->k;
    const long k = st->k;
    binc_step(st->binc, k);
    if (k >= 2) {
      const Rational m2((k - 1) * (k - 1));
      st->prod *= 1 - st->x2 / m2;
    }
    st->sign = -st->sign;
    const Rational k2(k * k);
    return Rational(st->sign) * (5 * k2 - st->x2) * st->prod /
           (2 * k2 * Rational(k) * Rational(st->binc) * (k2 - st->x2));
  };
}

std::function<Rational(long)> ag_stream(const Rational& y4) {
  struct State {
    Rational y4, prod{1};
    Integer binc{1};
    long k = 0;
    int sign = -1;
  };
  auto st = std::make_shared<State>();
  st->y4 = y4;
  return [st](long i) -> Rational {
    (void)i;
    ++st->k;
    const long k = st->k;
    binc_step(st->binc, k);
    if (k >= 2) {
      const Rational m2((k - 1) * (k - 1));
      const Rational m4 = m2 * m2;
      st->prod *= (m4 + 4 * st->y4) / (m4 - st->y4);
    }
    st->sign = -st->sign;
    const Rational k2(k * k);
    return Rational(5 * st->sign) * Rational(k) * st->prod /
           (2 * Rational(st->binc) * (k2 * k2 - st->y4));
  };
}

std::function<Rational(long)> cb_stream(const ParamsXY& xy) {
  struct State {
    ParamsXY xy;
    Rational prod{1};
    Integer binc{1};
    long k = 0;
    int sign = -1;
  };
  auto st = std::make_shared<State>();
  st->xy = xy;
  return [st](long i) -> Rational {
    (void)i;
    ++st->k;
    const long k = st->k;
    binc_step(st->binc, k);
    if (k >= 2) {
      const Rational m2((k - 1) * (k - 1));
      const Rational m4 = m2 * m2;
      st->prod *= ((m2 - st->xy.x2) * (m2 - st->xy.x2) + 4 * st->xy.y4) /
                  (m4 - st->xy.x2 * m2 - st->xy.y4);
    }
    st->sign = -st->sign;
    const Rational k2(k * k);
    return Rational(st->sign) * (5 * k2 - st->xy.x2) * st->prod /
           (2 * Rational(k) * Rational(st->binc) * (k2 * k2 - st->xy.x2 * k2 - st->xy.y4));
  };
}

std::function<Rational(long)> thm2_stream(const ParamsXY& xy, const Mutation* m) {
  struct State {
    ParamsXY xy;
    Rational numprod{1}, denprod{1};
    Integer binc{1};
    long k = 0;
    int sign = -1;
  };
  auto st = std::make_shared<State>();
  st->xy = xy;
  auto f = [xy](long j) -> Rational {
    const Rational j2(j * j);
    return j2 * j2 - xy.x2 * j2 - xy.y4;
  };
  return [st, f, m](long i) -> Rational {
    (void)i;
    ++st->k;
    const long k = st->k;
    binc_step(st->binc, k);
    if (k == 1) {
      st->denprod = f(1) * f(2);
    } else {
      const Rational m2((k - 1) * (k - 1));
      st->numprod *= (m2 - st->xy.x2) * (m2 - st->xy.x2) + 4 * st->xy.y4;
      st->denprod *= f(2 * k - 1) * f(2 * k) / f(k - 1);
    }
    st->sign = -st->sign;
    return Rational(st->sign) * r_eval(k, st->xy, m) * st->numprod /
           (2 * Rational(k) * Rational(st->binc) * st->denprod);
  };
}

std::function<Rational(long)> thm1_stream(const InitCond& init, const ParamsE& pe) {
  struct State {
    LSequence seq;
    Rational prod{1};
    long n = 0;
    State(const InitCond& i, const ParamsE& p) : seq(i, p) {}
  };
  auto st = std::make_shared<State>(init, pe);
  const ParamsE peq = pe;
  return [st, peq](long i) -> Rational {
    (void)i;
    ++st->n;
    const Rational f = sym_factor(peq.e1, peq.e2, st->n);
    if (f == 0) throw pole_error(st->n);
    st->prod *= f;
    return d_coeff(st->n, st->seq) / st->prod;
  };
}

std::function<Rational(long)> zeta7_stream() {
  struct State {
    Integer binc{1};
    Rational h4_2n{0}, h4_nm1{0};
    long n = 0;
    int sign = 1;
  };
  auto st = std::make_shared<State>();
  auto inv4 = [](long j) -> Rational {
    const Rational j2(j * j);
    return 1 / (j2 * j2);
  };
  return [st, inv4](long i) -> Rational {
    (void)i;
    ++st->n;
    const long n = st->n;
    binc_step(st->binc, n);
    st->h4_2n += inv4(2 * n - 1) + inv4(2 * n);
    if (n >= 2) st->h4_nm1 += inv4(n - 1);
    st->sign = -st->sign;
    Integer c5;
    mpz_pow_ui(c5.get_mpz_t(), st->binc.get_mpz_t(), 5);
    const auto rb = r_blocks(n);
    const Rational n2(n * n);
    const Rational n9 = n2 * n2 * n2 * n2 * Rational(n);
    return -Rational(st->sign) * (rb[3] + rb[0] * (st->h4_2n + 3 * st->h4_nm1)) /
           (2 * n9 * Rational(c5));
  };
}

Stream make_stream(const SeriesSpec& spec) {
  Stream s;
  if (spec.id == "koecher") {
    const Rational x2 = spec.xy.x2;
    if (!(rat_abs(x2) < 1)) throw domain_error("koecher needs |x2| < 1");
    s.term = koecher_stream(x2);
    s.reference = [x2](Precision p) { return zeta_mix(1, ParamsE{x2, Rational(0)}, p).value; };
  } else if (spec.id == "ag") {
    const Rational y4 = spec.xy.y4;
    if (!(rat_abs(y4) < 1)) throw domain_error("ag needs |y4| < 1");
    s.term = ag_stream(y4);
    s.reference = [y4](Precision p) { return zeta_mix(1, ParamsE{Rational(0), -y4}, p).value; };
  } else if (spec.id == "cb" || spec.id == "thm2") {
    spec.xy.require_domain();
    const ParamsXY xy = spec.xy;
    s.term = spec.id == "cb" ? cb_stream(xy) : thm2_stream(xy, nullptr);
    s.reference = [xy](Precision p) { return zeta_mix(1, xy.to_e(), p).value; };
  } else if (spec.id == "thm1") {
    spec.pe.require_admissible();
    const InitCond init = spec.init;
    const ParamsE pe = spec.pe;
    s.term = thm1_stream(init, pe);
    s.reference = [init, pe](Precision p) { return sum_F0(init, pe, p).value; };
  } else if (spec.id == "zeta7") {
    s.term = zeta7_stream();
    s.reference = [](Precision p) { return zeta_reference(7, p); };
  } else {
    throw std::invalid_argument("unknown series '" + spec.id + "'");
  }
  return s;
}

EvalReport run_stream(const std::string& id, std::function<Rational(long)> term, Precision p,
                      long forced_terms) {
  SumOptions opts;
  opts.digits = p.digits;
  opts.forced_terms = forced_terms;
  return sum_rational_terms(id, term, opts);
}

}  // namespace

EvalReport koecher_rhs(const Rational& x2, Precision p, long forced_terms) {
  if (!(rat_abs(x2) < 1)) throw domain_error("koecher needs |x2| < 1");
  return run_stream("koecher", koecher_stream(x2), p, forced_terms);
}

EvalReport ag_rhs(const Rational& y4, Precision p, long forced_terms) {
  if (!(rat_abs(y4) < 1)) throw domain_error("ag needs |y4| < 1");
  return run_stream("ag", ag_stream(y4), p, forced_terms);
}

EvalReport cb_rhs(const ParamsXY& xy, Precision p, long forced_terms) {
  xy.require_domain();
  return run_stream("cb", cb_stream(xy), p, forced_terms);
}

EvalReport thm2_rhs(const ParamsXY& xy, Precision p, long forced_terms, const Mutation* m) {
  xy.require_domain();
  return run_stream("thm2", thm2_stream(xy, m), p, forced_terms);
}

EvalReport thm1_rhs(const InitCond& init, const ParamsE& pe, Precision p, long forced_terms,
                    bool enforce_domain) {
  if (enforce_domain) pe.require_admissible();
  return run_stream("thm1", thm1_stream(init, pe), p, forced_terms);
}

EvalReport zeta7_series(Precision p, long forced_terms) {
  return run_stream("zeta7", zeta7_stream(), p, forced_terms);
}

ConvergenceProfile convergence_profile(const SeriesSpec& spec, long n_max) {
  if (n_max < 12) throw domain_error("profile needs n_max >= 12");
  ConvergenceProfile out;
  out.series_id = spec.id;
  out.n_max = n_max;
  out.ref_digits = static_cast<long>(std::ceil(3.4 * static_cast<double>(n_max))) + 30;
  const Precision rp(out.ref_digits);

  Stream st = make_stream(spec);
  const Real ref = st.reference(rp);

  Real acc(rp);
  double prev_cum = 0;
  out.rows.reserve(static_cast<std::size_t>(n_max));
  for (long i = 0; i < n_max; ++i) {
    acc += Real(st.term(i), rp);
    ProfileRow row;
    row.n = i + 1;
    row.partial = acc;
    row.abs_err = real_abs(acc - ref);
    row.cum_digits = row.abs_err.is_zero()
                         ? static_cast<double>(out.ref_digits)
                         : -real_log10(row.abs_err).to_double();
    row.digits_gained = row.cum_digits - prev_cum;
    prev_cum = row.cum_digits;
    out.rows.push_back(row);
  }

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  long cnt = 0;
  for (const auto& row : out.rows) {
    if (row.n < 10) continue;
    if (row.cum_digits > static_cast<double>(out.ref_digits) - 10) continue;  // saturated
    sx += static_cast<double>(row.n);
    sy += row.cum_digits;
    sxx += static_cast<double>(row.n) * static_cast<double>(row.n);
    sxy += static_cast<double>(row.n) * row.cum_digits;
    ++cnt;
  }
  if (cnt < 5) throw domain_error("profile window has too few usable points");
  const double det = static_cast<double>(cnt) * sxx - sx * sx;
  out.slope = (static_cast<double>(cnt) * sxy - sx * sy) / det;
  return out;
}

}  // namespace mwz
