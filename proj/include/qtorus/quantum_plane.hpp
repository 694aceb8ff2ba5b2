// Left-ideal Gröbner engine for the quantum plane Q(t)<l, m | lm = t^2 ml>.
//
// Polynomials are stored in monomial coordinates sum c_{p,q} l^p m^q with
// p, q >= 0. The engine is templated on the coefficient domain so that the
// same code runs symbolically (TRat) and at a specialized value of t
// (Rational), where the twist t^k becomes a number.
#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qtorus/coefficients.hpp"

namespace qtorus {

/// Exponent pair (p, q) of l^p m^q, or the index of e_{p,q} in the torus.
/// The defaulted ordering compares p first, then q: exactly lex with l > m.
struct PowerProduct {
  Exponent p = 0;
  Exponent q = 0;
  auto operator<=>(const PowerProduct&) const = default;
};

/// l^p m^q < l^r m^s iff p < r, or p = r and q < s.
bool lex_less(PowerProduct a, PowerProduct b);
/// True if l^d.p m^d.q divides l^n.p m^n.q (as power products).
bool divides(PowerProduct d, PowerProduct n);

template <class Coeff>
struct PlaneRing;

/// t symbolic: coefficients in Q(t).
template <>
struct PlaneRing<TRat> {
  TRat twist(Exponent k) const { return TRat(TPoly::t(k)); }
  bool symbolic() const { return true; }
};

/// t specialized to a nonzero rational.
template <>
struct PlaneRing<Rational> {
  Rational t0 = -1;
  Rational twist(Exponent k) const { return rational_pow(t0, k); }
  bool symbolic() const { return false; }
};

template <class Coeff>
class PlanePoly {
 public:
  using Terms = std::map<PowerProduct, Coeff>;

  PlanePoly() = default;
  PlanePoly(const Coeff& c);  // NOLINT: constants embed

  /// Canonical form; throws std::invalid_argument on a negative exponent.
  static PlanePoly normalize(const std::vector<std::pair<PowerProduct, Coeff>>& raw);
  static PlanePoly monomial(const Coeff& c, PowerProduct pp);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Coeff coeff(PowerProduct pp) const;

  // Valid only for nonzero polynomials.
  PowerProduct leading_pp() const { return terms_.rbegin()->first; }
  const Coeff& leading_coeff() const { return terms_.rbegin()->second; }

  PlanePoly& operator+=(const PlanePoly& o);
  PlanePoly& operator-=(const PlanePoly& o);
  PlanePoly& operator*=(const Coeff& c);
  friend PlanePoly operator+(PlanePoly a, const PlanePoly& b) { return a += b; }
  friend PlanePoly operator-(PlanePoly a, const PlanePoly& b) { return a -= b; }
  friend PlanePoly operator*(const Coeff& c, PlanePoly a) { return a *= c; }
  PlanePoly operator-() const;

  friend bool operator==(const PlanePoly& a, const PlanePoly& b) { return a.terms_ == b.terms_; }

  /// Divide by the leading coefficient.
  PlanePoly monic() const;

  std::string to_string() const;

 private:
  Terms terms_;
};

using SymPlanePoly = PlanePoly<TRat>;
using NumPlanePoly = PlanePoly<Rational>;

/// Minimal reduced monic basis, sorted by leading power product.
template <class Coeff>
struct GroebnerBasis {
  std::vector<PlanePoly<Coeff>> polys;
  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;
};

/// (l^a m^b) * f. Each term l^p m^q picks up t^{-2bp} from moving m^b past l^p.
template <class Coeff>
PlanePoly<Coeff> mono_left_mul(const PlaneRing<Coeff>& ring, Exponent a, Exponent b,
                               const PlanePoly<Coeff>& f);

/// Full product f * g in the quantum plane.
template <class Coeff>
PlanePoly<Coeff> plane_mul(const PlaneRing<Coeff>& ring, const PlanePoly<Coeff>& f,
                           const PlanePoly<Coeff>& g);

/// Complete left reduction of f modulo G: f - r lies in the left ideal of G
/// and no power product of r is divisible by a leading power product of G.
template <class Coeff>
PlanePoly<Coeff> reduce(const PlaneRing<Coeff>& ring, const PlanePoly<Coeff>& f,
                        const std::vector<PlanePoly<Coeff>>& G);

template <class Coeff>
PlanePoly<Coeff> s_polynomial(const PlaneRing<Coeff>& ring, const PlanePoly<Coeff>& f,
                              const PlanePoly<Coeff>& g);

/// The unique minimal reduced monic Gröbner basis of the left ideal of gens.
/// Throws std::invalid_argument if every generator is zero.
template <class Coeff>
GroebnerBasis<Coeff> buchberger(const PlaneRing<Coeff>& ring,
                                const std::vector<PlanePoly<Coeff>>& gens);

/// Buchberger plus principal monomial stripping until stable. The result
/// generates J' with J <= J' <= (extension of J) intersected with the plane.
template <class Coeff>
GroebnerBasis<Coeff> saturate_monomials(const PlaneRing<Coeff>& ring,
                                        const std::vector<PlanePoly<Coeff>>& gens);

/// Coefficientwise t -> t0.
NumPlanePoly specialize(const SymPlanePoly& f, const Rational& t0);

// Convenience wrappers for the symbolic ring.
inline SymPlanePoly mono_left_mul(Exponent a, Exponent b, const SymPlanePoly& f) {
  return mono_left_mul(PlaneRing<TRat>{}, a, b, f);
}
inline SymPlanePoly reduce(const SymPlanePoly& f, const std::vector<SymPlanePoly>& G) {
  return reduce(PlaneRing<TRat>{}, f, G);
}
inline SymPlanePoly s_polynomial(const SymPlanePoly& f, const SymPlanePoly& g) {
  return s_polynomial(PlaneRing<TRat>{}, f, g);
}
inline GroebnerBasis<TRat> buchberger(const std::vector<SymPlanePoly>& gens) {
  return buchberger(PlaneRing<TRat>{}, gens);
}
inline GroebnerBasis<TRat> saturate_monomials(const std::vector<SymPlanePoly>& gens) {
  return saturate_monomials(PlaneRing<TRat>{}, gens);
}

}  // namespace qtorus
