// Random inputs and independent reference implementations shared by the tests.
#pragma once

#include <map>
#include <random>
#include <vector>

#include "qtorus/band_operator.hpp"
#include "qtorus/classical.hpp"
#include "qtorus/quantum_plane.hpp"
#include "qtorus/quantum_torus.hpp"
#include "qtorus/skein_torus.hpp"

namespace testing {

using namespace qtorus;

class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}
  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  long nonzero(long lo, long hi) {
    for (;;) {
      const long v = range(lo, hi);
      if (v != 0) return v;
    }
  }

 private:
  std::mt19937_64 gen_;
};

inline Rational rat(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline TPoly random_tpoly(Rng& r, int terms = 3, long span = 3, long coeff = 4) {
  std::vector<std::pair<Exponent, Rational>> raw;
  for (int i = 0; i < terms; ++i) raw.emplace_back(r.range(-span, span), rat(r.range(-coeff, coeff), r.range(1, 3)));
  return TPoly::normalize(raw);
}

inline TPoly random_nonzero_tpoly(Rng& r, int terms = 3, long span = 3) {
  for (;;) {
    TPoly p = random_tpoly(r, terms, span);
    if (!p.is_zero()) return p;
  }
}

inline TRat random_trat(Rng& r) { return TRat(random_tpoly(r), random_nonzero_tpoly(r, 2, 2)); }

inline QTElement random_qt(Rng& r, int terms = 3, long span = 2) {
  QTElement x;
  for (int i = 0; i < terms; ++i)
    x += QTElement::basis(r.range(-span, span), r.range(-span, span), random_tpoly(r, 2, 2, 3));
  return x;
}

inline SymPlanePoly random_plane(Rng& r, int terms = 3, long maxdeg = 2) {
  std::vector<std::pair<PowerProduct, TRat>> raw;
  for (int i = 0; i < terms; ++i)
    raw.emplace_back(PowerProduct{r.range(0, maxdeg), r.range(0, maxdeg)}, TRat(random_tpoly(r, 2, 2, 3)));
  return SymPlanePoly::normalize(raw);
}

inline SkeinElement random_skein(Rng& r, int terms = 2, long span = 2) {
  SkeinElement s(random_tpoly(r, 1, 2, 3));
  for (int i = 0; i < terms; ++i) {
    const long p = r.range(0, span), q = r.range(-span, span);
    if (p == 0 && q == 0) continue;
    s += random_tpoly(r, 2, 2, 3) * phat_curve(CurveIndex(p, q));
  }
  return s;
}

// Quantum torus in monomial coordinates, multiplied by the commutation rule
// m^q l^r = t^{-2qr} l^r m^q alone.
using MonomialForm = std::map<PowerProduct, TPoly>;

inline MonomialForm monomial_product(const MonomialForm& x, const MonomialForm& y) {
  MonomialForm out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      TPoly& slot = out[PowerProduct{a.p + b.p, a.q + b.q}];
      slot += (ca * cb).shifted(-2 * a.q * b.p);
    }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

// Dense reference for band products: plain triple loop over all entries.
inline BandOperator dense_product(const BandOperator& a, const BandOperator& b) {
  const std::size_t n = a.truncation();
  BandOperator out(a.width() + b.width(), n);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) {
      TPoly s;
      for (std::size_t k = 0; k <= n; ++k) s += a.at(i, k) * b.at(k, j);
      if (!s.is_zero()) out.set(i, j, s);
    }
  return out;
}

inline BandOperator random_band(Rng& r, std::size_t width, std::size_t n) {
  BandOperator m(width, n);
  for (std::size_t c = 0; c <= n; ++c)
    for (std::size_t row = c > width ? c - width : 0; row <= std::min(n, c + width); ++row)
      if (r.range(0, 2) != 0) m.set(row, c, random_tpoly(r, 2, 3, 3));
  return m;
}

// Closed form of the curve operators, from the shift/diagonal representation
// l -> shift, m -> -t^{-2n} on phi_n with S_c = phi_{c+1} - phi_{-c-1}:
//   L(p,q) S_c = (-1)^q t^{-pq} [ t^{-2q(c+1)} S_{c+p} + t^{2q(c+1)} S'_{c-p} ]
// where S'_k = S_k (k >= 0), 0 (k = -1), -S_{-k-2} (k <= -2).
inline std::map<long, TPoly> curve_column(long p, long q, long c) {
  std::map<long, TPoly> col;
  const Rational sign = (q % 2 == 0) ? 1 : -1;
  col[c + p] += TPoly::monomial(sign, -p * q - 2 * q * (c + 1));
  const TPoly low = TPoly::monomial(sign, -p * q + 2 * q * (c + 1));
  const long k = c - p;
  if (k >= 0) col[k] += low;
  else if (k <= -2) col[-k - 2] -= low;
  std::erase_if(col, [](const auto& kv) { return kv.second.is_zero(); });
  return col;
}

// Commutative Buchberger over Q in l, m, lex with l > m: a separate,
// textbook implementation used only to cross-check the t = -1 engine.
namespace commutative {

using Poly = std::map<PowerProduct, Rational>;  // leading term = rbegin

inline void clean(Poly& f) {
  std::erase_if(f, [](const auto& kv) { return sgn(kv.second) == 0; });
}

inline Poly sub_scaled(Poly f, const Poly& g, const Rational& c, PowerProduct shift) {
  for (const auto& [pp, x] : g) f[PowerProduct{pp.p + shift.p, pp.q + shift.q}] -= c * x;
  clean(f);
  return f;
}

inline Poly remainder(Poly f, const std::vector<Poly>& G) {
  Poly r;
  while (!f.empty()) {
    const auto [lp, lc] = *f.rbegin();
    bool reduced = false;
    for (const auto& g : G) {
      const auto& [gp, gc] = *g.rbegin();
      if (gp.p <= lp.p && gp.q <= lp.q) {
        f = sub_scaled(f, g, lc / gc, PowerProduct{lp.p - gp.p, lp.q - gp.q});
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      r[lp] = lc;
      f.erase(lp);
    }
  }
  return r;
}

inline Poly spoly(const Poly& f, const Poly& g) {
  const auto& [fp, fc] = *f.rbegin();
  const auto& [gp, gc] = *g.rbegin();
  const PowerProduct L{std::max(fp.p, gp.p), std::max(fp.q, gp.q)};
  Poly out;
  for (const auto& [pp, x] : f) out[PowerProduct{pp.p + L.p - fp.p, pp.q + L.q - fp.q}] += x / fc;
  return sub_scaled(out, g, Rational(1) / gc, PowerProduct{L.p - gp.p, L.q - gp.q});
}

inline std::vector<Poly> groebner(std::vector<Poly> G) {
  std::erase_if(G, [](const Poly& f) { return f.empty(); });
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Poly r = remainder(spoly(G[i], G[j]), G);
      if (!r.empty()) G.push_back(r);
    }
  // minimal
  std::vector<Poly> M;
  for (std::size_t i = 0; i < G.size(); ++i) {
    const PowerProduct li = G[i].rbegin()->first;
    bool drop = false;
    for (std::size_t j = 0; j < G.size() && !drop; ++j) {
      if (i == j) continue;
      const PowerProduct lj = G[j].rbegin()->first;
      if (lj.p <= li.p && lj.q <= li.q && (lj != li || j < i)) drop = true;
    }
    if (!drop) M.push_back(G[i]);
  }
  // reduced, monic
  std::vector<Poly> R;
  for (std::size_t i = 0; i < M.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < M.size(); ++j)
      if (j != i) others.push_back(M[j]);
    const auto [lp, lc] = *M[i].rbegin();
    Poly tail = M[i];
    tail.erase(lp);
    Poly f = remainder(tail, others);
    f[lp] = lc;
    const Rational inv = Rational(1) / lc;
    for (auto& kv : f) kv.second *= inv;
    R.push_back(f);
  }
  std::sort(R.begin(), R.end(), [](const Poly& a, const Poly& b) { return a.rbegin()->first < b.rbegin()->first; });
  return R;
}

inline Poly from_num(const NumPlanePoly& f) {
  Poly out;
  for (const auto& [pp, c] : f.terms()) out[pp] = c;
  return out;
}

}  // namespace commutative

}  // namespace testing
