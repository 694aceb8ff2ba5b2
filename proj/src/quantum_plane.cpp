#include "qtorus/quantum_plane.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qtorus {

bool lex_less(PowerProduct a, PowerProduct b) { return a < b; }

bool divides(PowerProduct d, PowerProduct n) { return d.p <= n.p && d.q <= n.q; }

namespace {

// Sign and magnitude text of a coefficient, for term-by-term printing.
struct CoeffText {
  bool negative = false;
  bool unit = false;  // magnitude is exactly 1
  std::string magnitude;
};

CoeffText coeff_text(const Rational& c) {
  CoeffText t;
  t.negative = sgn(c) < 0;
  const Rational m = abs(c);
  t.unit = (m == 1);
  t.magnitude = m.get_str();
  return t;
}

CoeffText coeff_text(const TRat& c) {
  CoeffText t;
  if (c.is_polynomial() && c.num().is_monomial()) {
    const auto& [e, r] = *c.num().terms().begin();
    t.negative = sgn(r) < 0;
    const TPoly mag = TPoly::monomial(abs(r), e);
    t.unit = mag.is_one();
    t.magnitude = mag.to_string();
    return t;
  }
  t.magnitude = "(" + c.to_string() + ")";
  return t;
}

std::string power_text(PowerProduct pp) {
  std::string s;
  auto var = [&s](const char* name, Exponent e) {
    if (e == 0) return;
    if (!s.empty()) s += '*';
    s += name;
    if (e != 1) s += "^" + std::to_string(e);
  };
  var("l", pp.p);
  var("m", pp.q);
  return s;
}

template <class Coeff>
bool coeff_is_zero(const Coeff& c) {
  return is_zero(c);
}

}  // namespace

// ---------------------------------------------------------------- PlanePoly

template <class Coeff>
PlanePoly<Coeff>::PlanePoly(const Coeff& c) {
  if (!coeff_is_zero(c)) terms_.emplace(PowerProduct{0, 0}, c);
}

template <class Coeff>
PlanePoly<Coeff> PlanePoly<Coeff>::normalize(
    const std::vector<std::pair<PowerProduct, Coeff>>& raw) {
  PlanePoly f;
  for (const auto& [pp, c] : raw) {
    if (pp.p < 0 || pp.q < 0)
      throw std::invalid_argument("quantum-plane term has a negative exponent");
    auto [it, inserted] = f.terms_.emplace(pp, c);
    if (!inserted) it->second += c;
    if (coeff_is_zero(it->second)) f.terms_.erase(it);
  }
  return f;
}

template <class Coeff>
PlanePoly<Coeff> PlanePoly<Coeff>::monomial(const Coeff& c, PowerProduct pp) {
  return normalize({{pp, c}});
}

template <class Coeff>
Coeff PlanePoly<Coeff>::coeff(PowerProduct pp) const {
  auto it = terms_.find(pp);
  return it == terms_.end() ? Coeff(0) : it->second;
}

template <class Coeff>
PlanePoly<Coeff>& PlanePoly<Coeff>::operator+=(const PlanePoly& o) {
  for (const auto& [pp, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(pp, c);
    if (!inserted) {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }
  return *this;
}

template <class Coeff>
PlanePoly<Coeff>& PlanePoly<Coeff>::operator-=(const PlanePoly& o) {
  for (const auto& [pp, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(pp, -c);
    if (!inserted) {
      it->second -= c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }
  return *this;
}

template <class Coeff>
PlanePoly<Coeff>& PlanePoly<Coeff>::operator*=(const Coeff& c) {
  if (coeff_is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

template <class Coeff>
PlanePoly<Coeff> PlanePoly<Coeff>::operator-() const {
  PlanePoly r = *this;
  for (auto& kv : r.terms_) kv.second = -kv.second;
  return r;
}

template <class Coeff>
PlanePoly<Coeff> PlanePoly<Coeff>::monic() const {
  if (is_zero()) return *this;
  const Coeff inv = Coeff(1) / leading_coeff();
  PlanePoly r = *this;
  r *= inv;
  return r;
}

template <class Coeff>
std::string PlanePoly<Coeff>::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const CoeffText ct = coeff_text(it->second);
    if (first) {
      if (ct.negative) os << '-';
    } else {
      os << (ct.negative ? " - " : " + ");
    }
    const std::string vars = power_text(it->first);
    if (vars.empty()) {
      os << ct.magnitude;
    } else {
      if (!ct.unit) os << ct.magnitude << '*';
      os << vars;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- engine

template <class Coeff>
PlanePoly<Coeff> mono_left_mul(const PlaneRing<Coeff>& ring, Exponent a, Exponent b,
                               const PlanePoly<Coeff>& f) {
  if (a < 0 || b < 0) throw std::invalid_argument("mono_left_mul needs nonnegative exponents");
  std::vector<std::pair<PowerProduct, Coeff>> raw;
  raw.reserve(f.size());
  for (const auto& [pp, c] : f.terms()) {
    PowerProduct out{exp_add(pp.p, a), exp_add(pp.q, b)};
    if (b == 0 || pp.p == 0)
      raw.emplace_back(out, c);
    else
      raw.emplace_back(out, c * ring.twist(exp_mul(-2, exp_mul(b, pp.p))));
  }
  return PlanePoly<Coeff>::normalize(raw);
}

template <class Coeff>
PlanePoly<Coeff> plane_mul(const PlaneRing<Coeff>& ring, const PlanePoly<Coeff>& f,
                           const PlanePoly<Coeff>& g) {
  PlanePoly<Coeff> out;
  for (const auto& [pp, c] : f.terms()) {
    PlanePoly<Coeff> lifted = mono_left_mul(ring, pp.p, pp.q, g);
    lifted *= c;
    out += lifted;
  }
  return out;
}

template <class Coeff>
PlanePoly<Coeff> reduce(const PlaneRing<Coeff>& ring, const PlanePoly<Coeff>& f,
                        const std::vector<PlanePoly<Coeff>>& G) {
  PlanePoly<Coeff> rest = f;
  std::vector<std::pair<PowerProduct, Coeff>> remainder;
  while (!rest.is_zero()) {
    const PowerProduct pp = rest.leading_pp();
    const PlanePoly<Coeff>* divisor = nullptr;
    for (const auto& g : G) {
      if (g.is_zero()) throw std::invalid_argument("reduce: zero polynomial in divisor list");
      if (divides(g.leading_pp(), pp)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.emplace_back(pp, rest.leading_coeff());
      rest -= PlanePoly<Coeff>::monomial(rest.leading_coeff(), pp);
      continue;
    }
    const PowerProduct lg = divisor->leading_pp();
    PlanePoly<Coeff> lifted = mono_left_mul(ring, pp.p - lg.p, pp.q - lg.q, *divisor);
    const Coeff factor = rest.leading_coeff() / lifted.leading_coeff();
    lifted *= factor;
    rest -= lifted;
  }
  return PlanePoly<Coeff>::normalize(remainder);
}

template <class Coeff>
PlanePoly<Coeff> s_polynomial(const PlaneRing<Coeff>& ring, const PlanePoly<Coeff>& f,
                              const PlanePoly<Coeff>& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_polynomial of zero");
  const PowerProduct lf = f.leading_pp(), lg = g.leading_pp();
  const PowerProduct top{std::max(lf.p, lg.p), std::max(lf.q, lg.q)};
  PlanePoly<Coeff> fl = mono_left_mul(ring, top.p - lf.p, top.q - lf.q, f);
  PlanePoly<Coeff> gl = mono_left_mul(ring, top.p - lg.p, top.q - lg.q, g);
  fl *= Coeff(1) / fl.leading_coeff();
  gl *= Coeff(1) / gl.leading_coeff();
  return fl - gl;
}

namespace {

// Multipliers (u, v) with u a = v b, kept polynomial when a and b are.
std::pair<Rational, Rational> cross_factors(const Rational& a, const Rational& b) { return {1, a / b}; }

std::pair<TRat, TRat> cross_factors(const TRat& a, const TRat& b) {
  if (!a.is_polynomial() || !b.is_polynomial()) return {TRat(1), a / b};
  const TPoly g = TPoly::gcd(a.num(), b.num());
  return {TRat(*b.num().divide_exact(g)), TRat(*a.num().divide_exact(g))};
}

// A scalar multiple of f that is cheap to carry through the computation.
PlanePoly<Rational> compact(const PlanePoly<Rational>& f) { return f.monic(); }

PlanePoly<TRat> compact(const PlanePoly<TRat>& f) {
  TPoly den(1);
  for (const auto& [pp, c] : f.terms()) {
    const TPoly g = TPoly::gcd(den, c.den());
    den = den * *c.den().divide_exact(g);
  }
  std::vector<TPoly> nums;
  TPoly content;
  for (const auto& [pp, c] : f.terms()) {
    nums.push_back(c.num() * *den.divide_exact(c.den()));
    content = TPoly::gcd(content, nums.back());
  }
  // fix the rational scale so the leading coefficient's top term is 1
  const TPoly lead = *nums.back().divide_exact(content);
  const TPoly unit = TPoly::monomial(Rational(1) / lead.leading_coeff(), -lead.low_degree());
  std::vector<std::pair<PowerProduct, TRat>> raw;
  std::size_t i = 0;
  for (const auto& [pp, c] : f.terms()) raw.emplace_back(pp, TRat(*nums[i++].divide_exact(content) * unit));
  return PlanePoly<TRat>::normalize(raw);
}

// Normal form of f modulo G up to a nonzero scalar, without dividing coefficients.
template <class Coeff>
PlanePoly<Coeff> pseudo_reduce(const PlaneRing<Coeff>& ring, const PlanePoly<Coeff>& f,
                               const std::vector<const PlanePoly<Coeff>*>& G) {
  PlanePoly<Coeff> rest = f;
  PlanePoly<Coeff> remainder;
  while (!rest.is_zero()) {
    const PowerProduct pp = rest.leading_pp();
    const PlanePoly<Coeff>* divisor = nullptr;
    for (const auto* g : G)
      if (divides(g->leading_pp(), pp)) {
        divisor = g;
        break;
      }
    if (divisor == nullptr) {
      const PlanePoly<Coeff> top = PlanePoly<Coeff>::monomial(rest.leading_coeff(), pp);
      remainder += top;
      rest -= top;
      continue;
    }
    const PowerProduct lg = divisor->leading_pp();
    PlanePoly<Coeff> lifted = mono_left_mul(ring, pp.p - lg.p, pp.q - lg.q, *divisor);
    const auto [u, v] = cross_factors(rest.leading_coeff(), lifted.leading_coeff());
    if (!(u == Coeff(1))) {
      rest *= u;
      remainder *= u;
    }
    lifted *= v;
    rest -= lifted;
    if (!rest.is_zero() && rest.terms().size() > 1 && !(u == Coeff(1))) {
      // keep the coefficients from growing: divide out the common content
      PlanePoly<Coeff> both = rest + remainder;
      const PlanePoly<Coeff> c = compact(both);
      const Coeff scale = c.leading_coeff() / both.leading_coeff();
      rest *= scale;
      remainder *= scale;
    }
  }
  return remainder.is_zero() ? remainder : compact(remainder);
}

template <class Coeff>
PlanePoly<Coeff> pseudo_s_polynomial(const PlaneRing<Coeff>& ring, const PlanePoly<Coeff>& f,
                                     const PlanePoly<Coeff>& g) {
  const PowerProduct lf = f.leading_pp(), lg = g.leading_pp();
  const PowerProduct top{std::max(lf.p, lg.p), std::max(lf.q, lg.q)};
  PlanePoly<Coeff> fl = mono_left_mul(ring, top.p - lf.p, top.q - lf.q, f);
  PlanePoly<Coeff> gl = mono_left_mul(ring, top.p - lg.p, top.q - lg.q, g);
  const auto [u, v] = cross_factors(fl.leading_coeff(), gl.leading_coeff());
  fl *= u;
  gl *= v;
  return fl - gl;
}

template <class Coeff>
std::vector<PlanePoly<Coeff>> minimal_reduced(const PlaneRing<Coeff>& ring,
                                              std::vector<PlanePoly<Coeff>> G) {
  std::sort(G.begin(), G.end(),
            [](const auto& a, const auto& b) { return a.leading_pp() < b.leading_pp(); });
  std::vector<PlanePoly<Coeff>> kept;
  for (auto& g : G) {
    bool redundant = false;
    for (const auto& k : kept)
      if (divides(k.leading_pp(), g.leading_pp())) redundant = true;
    if (!redundant) kept.push_back(std::move(g));
  }
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<const PlanePoly<Coeff>*> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(&kept[j]);
    kept[i] = pseudo_reduce(ring, kept[i], others).monic();
  }
  return kept;
}

PowerProduct lcm(PowerProduct a, PowerProduct b) { return {std::max(a.p, b.p), std::max(a.q, b.q)}; }

}  // namespace

template <class Coeff>
GroebnerBasis<Coeff> buchberger(const PlaneRing<Coeff>& ring,
                                const std::vector<PlanePoly<Coeff>>& gens) {
  std::vector<PlanePoly<Coeff>> G;
  std::vector<bool> active;
  for (const auto& g : gens)
    if (!g.is_zero()) G.push_back(compact(g));
  if (G.empty()) throw std::invalid_argument("buchberger: all generators are zero");

  // Pairs by lcm, lex-smallest first. Only the chain criterion is applied:
  // the coprime criterion does not hold for the twisted product.
  using Pair = std::tuple<PowerProduct, std::size_t, std::size_t>;
  std::set<Pair> pairs;
  auto unit_ideal = [&] {
    return GroebnerBasis<Coeff>{{PlanePoly<Coeff>::monomial(Coeff(1), PowerProduct{0, 0})}};
  };
  auto insert = [&](std::size_t k) {
    const PowerProduct h = G[k].leading_pp();
    // new pairs: drop (i, k) when some (j, k) has an lcm strictly dividing it,
    // or an equal lcm that was already kept
    std::vector<std::pair<PowerProduct, std::size_t>> fresh;
    for (std::size_t i = 0; i < k; ++i)
      if (active[i]) fresh.emplace_back(lcm(G[i].leading_pp(), h), i);
    std::vector<std::pair<PowerProduct, std::size_t>> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      bool drop = false;
      for (std::size_t b = 0; b < fresh.size() && !drop; ++b) {
        if (a == b || !divides(fresh[b].first, fresh[a].first)) continue;
        drop = fresh[b].first != fresh[a].first || b < a;
      }
      if (!drop) kept.push_back(fresh[a]);
    }
    // old pairs made redundant by h
    for (auto it = pairs.begin(); it != pairs.end();) {
      const auto& [l, i, j] = *it;
      if (divides(h, l) && lcm(G[i].leading_pp(), h) != l && lcm(G[j].leading_pp(), h) != l)
        it = pairs.erase(it);
      else
        ++it;
    }
    for (const auto& [l, i] : kept) pairs.emplace(l, i, k);
    for (std::size_t i = 0; i < k; ++i)
      if (active[i] && divides(h, G[i].leading_pp())) active[i] = false;
    active.push_back(true);
  };
  for (std::size_t k = 0; k < G.size(); ++k) {
    if (G[k].leading_pp() == PowerProduct{0, 0}) return unit_ideal();
    insert(k);
  }

  while (!pairs.empty()) {
    const auto [l, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    std::vector<const PlanePoly<Coeff>*> divisors;
    for (std::size_t k = 0; k < G.size(); ++k)
      if (active[k]) divisors.push_back(&G[k]);
    PlanePoly<Coeff> r = pseudo_reduce(ring, pseudo_s_polynomial(ring, G[i], G[j]), divisors);
    if (r.is_zero()) continue;
    if (r.leading_pp() == PowerProduct{0, 0}) return unit_ideal();
    G.push_back(std::move(r));
    insert(G.size() - 1);
  }
  std::vector<PlanePoly<Coeff>> live;
  for (std::size_t k = 0; k < G.size(); ++k)
    if (active[k]) live.push_back(std::move(G[k]));
  return GroebnerBasis<Coeff>{minimal_reduced(ring, std::move(live))};
}

template <class Coeff>
GroebnerBasis<Coeff> saturate_monomials(const PlaneRing<Coeff>& ring,
                                        const std::vector<PlanePoly<Coeff>>& gens) {
  if (gens.empty()) throw std::invalid_argument("saturate_monomials: no generators");
  GroebnerBasis<Coeff> basis = buchberger(ring, gens);
  for (;;) {
    bool stripped = false;
    std::vector<PlanePoly<Coeff>> next;
    for (const auto& g : basis.polys) {
      bool all_l = true, all_m = true;
      for (const auto& [pp, c] : g.terms()) {
        all_l = all_l && pp.p >= 1;
        all_m = all_m && pp.q >= 1;
      }
      if (!all_l && !all_m) {
        next.push_back(g);
        continue;
      }
      stripped = true;
      std::vector<std::pair<PowerProduct, Coeff>> raw;
      for (const auto& [pp, c] : g.terms()) {
        if (all_l)
          raw.emplace_back(PowerProduct{pp.p - 1, pp.q}, c);
        else  // m * l^p m^(q-1) = t^(-2p) l^p m^q
          raw.emplace_back(PowerProduct{pp.p, pp.q - 1}, c * ring.twist(exp_mul(2, pp.p)));
      }
      next.push_back(PlanePoly<Coeff>::normalize(raw));
    }
    if (!stripped) return basis;
    basis = buchberger(ring, next);
  }
}

NumPlanePoly specialize(const SymPlanePoly& f, const Rational& t0) {
  std::vector<std::pair<PowerProduct, Rational>> raw;
  for (const auto& [pp, c] : f.terms()) raw.emplace_back(pp, c.specialize(t0));
  return NumPlanePoly::normalize(raw);
}

#define QTORUS_INSTANTIATE(C)                                                                   \
  template class PlanePoly<C>;                                                                  \
  template PlanePoly<C> mono_left_mul(const PlaneRing<C>&, Exponent, Exponent,                  \
                                      const PlanePoly<C>&);                                     \
  template PlanePoly<C> plane_mul(const PlaneRing<C>&, const PlanePoly<C>&, const PlanePoly<C>&); \
  template PlanePoly<C> reduce(const PlaneRing<C>&, const PlanePoly<C>&,                        \
                               const std::vector<PlanePoly<C>>&);                               \
  template PlanePoly<C> s_polynomial(const PlaneRing<C>&, const PlanePoly<C>&,                  \
                                     const PlanePoly<C>&);                                      \
  template GroebnerBasis<C> buchberger(const PlaneRing<C>&, const std::vector<PlanePoly<C>>&);  \
  template GroebnerBasis<C> saturate_monomials(const PlaneRing<C>&,                             \
                                               const std::vector<PlanePoly<C>>&);

QTORUS_INSTANTIATE(TRat)
QTORUS_INSTANTIATE(Rational)

#undef QTORUS_INSTANTIATE

}  // namespace qtorus
