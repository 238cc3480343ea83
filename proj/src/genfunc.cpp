#include "mwz/genfunc.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "mwz/errors.hpp"
#include "mwz/series.hpp"
#include "mwz/zeta_ref.hpp"

namespace mwz {

namespace {

using BiPoly = std::vector<std::vector<Rational>>;

BiPoly bp_zero(long nx, long ny) {
  return BiPoly(static_cast<std::size_t>(nx) + 1,
                std::vector<Rational>(static_cast<std::size_t>(ny) + 1, Rational(0)));
}

BiPoly bp_mul(const BiPoly& a, const BiPoly& b, long nx, long ny) {
  BiPoly c = bp_zero(nx, ny);
  for (long i = 0; i <= nx; ++i)
    for (long j = 0; j <= ny; ++j) {
      if (a[i][j] == 0) continue;
      for (long u = 0; i + u <= nx; ++u)
        for (long v = 0; j + v <= ny; ++v) {
          if (b[u][v] == 0) continue;
          c[i + u][j + v] += a[i][j] * b[u][v];
        }
    }
  return c;
}

// truncated inverse of m^4 - m^2 X - Y via the geometric series in
// (m^2 X + Y)/m^4; exact at total order nx+ny
BiPoly bp_inv_factor(long m, long nx, long ny) {
  const Rational m2(m * m);
  const Rational m4 = m2 * m2;
  BiPoly g = bp_zero(nx, ny);
  if (nx >= 1) g[1][0] = m2 / m4;
  if (ny >= 1) g[0][1] = 1 / m4;
  BiPoly acc = bp_zero(nx, ny);
  acc[0][0] = 1;
  BiPoly cur = g;
  for (long i = 1; i <= nx + ny; ++i) {
    for (long a = 0; a <= nx; ++a)
      for (long b = 0; b <= ny; ++b) acc[a][b] += cur[a][b];
    cur = bp_mul(cur, g, nx, ny);
  }
  for (long a = 0; a <= nx; ++a)
    for (long b = 0; b <= ny; ++b) acc[a][b] /= m4;
  return acc;
}

BiPoly bp_den_factor(long m, long nx, long ny) {
  const Rational m2(m * m);
  BiPoly f = bp_zero(nx, ny);
  f[0][0] = m2 * m2;
  if (nx >= 1) f[1][0] = -m2;
  if (ny >= 1) f[0][1] = Rational(-1);
  return f;
}

BiPoly bp_num_factor(long m, long nx, long ny) {
  const Rational m2(m * m);
  BiPoly f = bp_zero(nx, ny);
  f[0][0] = m2 * m2;
  if (nx >= 1) f[1][0] = -2 * m2;
  if (nx >= 2) f[2][0] = Rational(1);
  if (ny >= 1) f[0][1] = Rational(4);
  return f;
}

}  // namespace

ZetaMixResult zeta_mix(int pow, const ParamsE& pe, Precision p) {
  if (pow < 0 || pow > 2) throw domain_error("zeta_mix weight must be 0, 1, or 2");
  const long d = p.digits;

  const Rational s_abs = rat_abs(pe.e1) + rat_abs(pe.e2);
  long j0 = 1;
  while (2 * s_abs > Rational(j0) * Rational(j0)) ++j0;

  // The tail differences below j0 cancel catastrophically, and the binomial
  // weights grow like s_abs^t, so the working precision must absorb the
  // projected weight growth over the rows the stop rule will take.
  long extra = 0;
  const double rd = Rational(s_abs / (Rational(j0) * Rational(j0))).get_d();
  if (rd > 0 && s_abs > 1) {
    const double rows = (d + 8) / -std::log10(rd) + 2;
    extra = static_cast<long>(std::ceil(rows * std::log10(s_abs.get_d()))) + 10;
  }
  const Precision wp(d + 10 + extra);
  const Real target = Real::pow10(-(d + 5), wp);

  Rational head(0);
  for (long j = 1; j < j0; ++j) {
    const Rational f = sym_factor(pe.e1, pe.e2, j);
    if (f == 0) throw pole_error(j);
    head += rat_pow(Rational(j), pow) / f;
  }

  std::map<long, Real> tails;
  auto ztail = [&](long s) -> const Real& {
    auto it = tails.find(s);
    if (it != tails.end()) return it->second;
    Real t = zeta_reference(s, wp);
    Rational part(0);
    for (long j = 1; j < j0; ++j) part += rat_pow(Rational(j), -s);
    t -= Real(part, wp);
    return tails.emplace(s, t).first->second;
  };

  ZetaMixResult out;
  Real acc(Rational(head), wp);
  const Rational r = s_abs / (Rational(j0) * Rational(j0));

  if (r == 0) {
    acc += ztail(4 - pow);
    out.value = acc;
    out.bound = Real::pow10(-(d + 8), wp);
    out.terms = 1;
    return out;
  }

  std::vector<Rational> pw1{Rational(1)}, pw2{Rational(1)};  // e1^i, (-e2)^i
  Rational rp = r;  // r^(t+1)
  for (long t = 0;; ++t) {
    while (static_cast<long>(pw1.size()) <= t) pw1.push_back(pw1.back() * pe.e1);
    while (static_cast<long>(pw2.size()) <= t) pw2.push_back(pw2.back() * -pe.e2);
    for (long i = 0; i <= t; ++i) {
      const Rational w = binomial(static_cast<unsigned long>(t), static_cast<unsigned long>(i)) *
                         pw1[i] * pw2[t - i];
      if (w == 0) continue;
      acc += real_mul_q(ztail(4 * t + 4 - 2 * i - pow), w);
    }
    const Rational bq = 2 * rp / (1 - r);
    const Real bound(bq, wp);
    if (bound < target) {
      out.value = acc;
      out.bound = bound + Real::pow10(-(d + 8), wp);
      out.terms = t + 1;
      return out;
    }
    rp *= r;
  }
}

Rational coeff_weight(long n, long m) {
  if (n < 0 || m < 0) throw domain_error("coeff_weight needs n, m >= 0");
  return binomial(static_cast<unsigned long>(n + m), static_cast<unsigned long>(n));
}

EvalReport bivariate_lhs(const ParamsXY& xy, Precision p) {
  xy.require_domain();
  const ZetaMixResult zm = zeta_mix(1, xy.to_e(), p);
  EvalReport rep;
  rep.series_id = "bivariate";
  rep.value = zm.value;
  rep.tail_bound = zm.bound;
  rep.terms_used = zm.terms;
  rep.digits = p.digits;
  return rep;
}

BiSeries rhs_taylor(long n_terms, long nx, long ny, const Mutation* m) {
  if (nx < 0 || nx > 4 || ny < 0 || ny > 4)
    throw budget_error("expansion order is limited to 4 in each variable");
  if (n_terms < 1 || n_terms > 1000)
    throw budget_error("expansion term count is limited to 1000");

  BiSeries out;
  out.nx = nx;
  out.ny = ny;
  out.terms_used = n_terms;
  out.c = bp_zero(nx, ny);

  BiPoly num = bp_zero(nx, ny);
  num[0][0] = 1;  // empty product at k = 1
  BiPoly invd = bp_mul(bp_inv_factor(1, nx, ny), bp_inv_factor(2, nx, ny), nx, ny);
  Integer binc(2);  // C(2k,k) at k = 1
  int sign = 1;
  BiPoly last = bp_zero(nx, ny), prev = bp_zero(nx, ny);

  for (long k = 1; k <= n_terms; ++k) {
    const auto rb = r_blocks(k, m);
    BiPoly rp = bp_zero(nx, ny);
    rp[0][0] = rb[0];
    if (nx >= 1) rp[1][0] = rb[1];
    if (nx >= 2) rp[2][0] = rb[2];
    if (ny >= 1) rp[0][1] = rb[3];
    if (nx >= 1 && ny >= 1) rp[1][1] = rb[4];

    BiPoly contrib = bp_mul(bp_mul(rp, num, nx, ny), invd, nx, ny);
    const Rational scale = Rational(sign) / (2 * Rational(k) * Rational(binc));
    for (long a = 0; a <= nx; ++a)
      for (long b = 0; b <= ny; ++b) {
        contrib[a][b] *= scale;
        out.c[a][b] += contrib[a][b];
      }
    prev = last;
    last = contrib;

    // advance to k + 1
    num = bp_mul(num, bp_num_factor(k, nx, ny), nx, ny);
    invd = bp_mul(invd, bp_den_factor(k, nx, ny), nx, ny);
    invd = bp_mul(invd, bp_inv_factor(2 * k + 1, nx, ny), nx, ny);
    invd = bp_mul(invd, bp_inv_factor(2 * k + 2, nx, ny), nx, ny);
    binc = binc * (2 * (2 * k + 1));
    mpz_divexact_ui(binc.get_mpz_t(), binc.get_mpz_t(), static_cast<unsigned long>(k + 1));
    sign = -sign;
  }

  double rho = 0;
  for (long a = 0; a <= nx; ++a)
    for (long b = 0; b <= ny; ++b) {
      if (prev[a][b] == 0 || last[a][b] == 0) continue;
      rho = std::max(rho, Rational(rat_abs(last[a][b]) / rat_abs(prev[a][b])).get_d());
    }
  if (rho == 0) rho = 1.0 / 512.0;
  rho = std::min(rho, 0.9);
  const Rational rq(rho);
  const Precision ep(30);
  out.err.assign(static_cast<std::size_t>(nx) + 1,
                 std::vector<Real>(static_cast<std::size_t>(ny) + 1, Real(ep)));
  for (long a = 0; a <= nx; ++a)
    for (long b = 0; b <= ny; ++b)
      out.err[a][b] = real_mul_q(Real(rat_abs(last[a][b]), ep), rq / (1 - rq));
  return out;
}

}  // namespace mwz
