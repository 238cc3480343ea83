#include "mwz/zeta_ref.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "mwz/errors.hpp"

namespace mwz {

namespace {
std::mutex g_bernoulli_mu;
std::vector<Rational>& bernoulli_cache() {
  static std::vector<Rational> cache{Rational(1), Rational(-1, 2)};
  return cache;
}

std::mutex g_zeta_mu;
std::map<std::pair<long, long>, Real>& zeta_cache() {
  static std::map<std::pair<long, long>, Real> cache;
  return cache;
}

Real inv_pow(unsigned long j, unsigned long s, Precision p) {
  Real r(p);
  mpfr_ui_pow_ui(r.raw(), j, s, MPFR_RNDN);
  mpfr_ui_div(r.raw(), 1, r.raw(), MPFR_RNDN);
  return r;
}

// sum_{j=1}^{N-1} j^-s + N^(1-s)/(s-1) + N^-s/2
//   + sum_{k>=1} B_2k/(2k)! * s(s+1)...(s+2k-2) * N^(-s-2k+1)
// The correction terms decrease until k ~ pi*N; with N >= max(50, digits)
// they pass below the target long before that, so the restart path is a
// safety net only.
Real euler_maclaurin(long s, long work) {
  const Precision wp(work);
  Real target = Real::pow10(-(work + 3), wp);
  unsigned long n = static_cast<unsigned long>(work > 50 ? work : 50);
  for (;; n *= 2) {
    Real acc(wp);
    for (unsigned long j = 1; j < n; ++j) acc += inv_pow(j, static_cast<unsigned long>(s), wp);
    Real npow = inv_pow(n, static_cast<unsigned long>(s - 1), wp);
    acc += npow / Real(s - 1, wp);
    npow /= Real(static_cast<long>(n), wp);  // now N^-s
    acc += npow / Real(2, wp);

    Rational poch(s);
    Rational nfac2(1);  // (2k)!
    Real npw = npow / Real(static_cast<long>(n), wp);  // N^(-s-2k+1), k = 1
    const Real ninv2 = Real(1, wp) / (Real(static_cast<long>(n), wp) * Real(static_cast<long>(n), wp));
    Real prev_abs(wp);
    bool restart = false;
    for (unsigned long k = 1;; ++k) {
      nfac2 *= Rational(2 * k - 1) * Rational(2 * k);
      const Rational coeff = bernoulli(2 * k) / nfac2 * poch;
      const Real term = real_mul_q(npw, coeff);
      const Real ta = real_abs(term);
      if (ta < target) return acc;
      if (k > 1 && ta > prev_abs) {
        restart = true;  // asymptotic tail bottomed out above target
        break;
      }
      acc += term;
      prev_abs = ta;
      poch *= Rational(s + 2 * static_cast<long>(k) - 1) * Rational(s + 2 * static_cast<long>(k));
      npw *= ninv2;
    }
    if (!restart) return acc;
  }
}

Real direct_sum(long s, long work) {
  const Precision wp(work);
  Real target = Real::pow10(-(work + 3), wp);
  Real acc(wp);
  for (unsigned long j = 1;; ++j) {
    acc += inv_pow(j, static_cast<unsigned long>(s), wp);
    // integral tail bound: sum_{i>j} i^-s < j^(1-s)/(s-1)
    Real tail = inv_pow(j, static_cast<unsigned long>(s - 1), wp) / Real(s - 1, wp);
    if (tail < target) return acc;
  }
}
}  // namespace

Rational bernoulli(unsigned long n) {
  std::lock_guard<std::mutex> lock(g_bernoulli_mu);
  auto& cache = bernoulli_cache();
  while (cache.size() <= n) {
    const unsigned long m = cache.size();
    Rational s(0);
    for (unsigned long j = 0; j < m; ++j) s += binomial(m + 1, j) * cache[j];
    cache.push_back(-s / Rational(static_cast<long>(m) + 1));
  }
  return cache[n];
}

Real zeta_reference(long s, Precision p) {
  if (s < 2) throw domain_error("zeta_reference requires s >= 2");
  const long work = p.digits + 10;
  {
    std::lock_guard<std::mutex> lock(g_zeta_mu);
    auto it = zeta_cache().find({s, work});
    if (it != zeta_cache().end()) return it->second;
  }
  // past ~3.4 digits per unit of s a handful of direct terms already lands
  // below the guard band
  Real v = (s > 2 && static_cast<double>(s - 1) * 0.301 > static_cast<double>(work + 5))
               ? direct_sum(s, work)
               : euler_maclaurin(s, work);
  std::lock_guard<std::mutex> lock(g_zeta_mu);
  auto& cache = zeta_cache();
  if (cache.size() > 4096) cache.clear();
  return cache.emplace(std::make_pair(s, work), v).first->second;
}

}  // namespace mwz
