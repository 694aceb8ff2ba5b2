// The Laurent part of the quantum torus, in the basis e_{p,q} = t^{-pq} l^p m^q
// with product e_{p,q} * e_{r,s} = t^{ps-qr} e_{p+r,q+s}.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qtorus/coefficients.hpp"
#include "qtorus/quantum_plane.hpp"

namespace qtorus {

class QTElement {
 public:
  using Terms = std::map<PowerProduct, TPoly>;

  QTElement() = default;
  QTElement(const TPoly& c);  // NOLINT: scalar multiple of e_{0,0}

  /// c * e_{p,q}
  static QTElement basis(Exponent p, Exponent q, const TPoly& c = TPoly(1));
  static QTElement normalize(const std::vector<std::pair<PowerProduct, TPoly>>& raw);
  /// From coefficients of l^p m^q (monomial coordinates, any sign of p, q).
  static QTElement from_monomials(const Terms& monomial_terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  TPoly coeff(PowerProduct pq) const;

  /// Coefficients of l^p m^q: since l^p m^q = t^{pq} e_{p,q}, c e_{p,q} = c t^{-pq} l^p m^q.
  Terms to_monomials() const;

  QTElement& operator+=(const QTElement& o);
  QTElement& operator-=(const QTElement& o);
  QTElement& operator*=(const TPoly& c);
  friend QTElement operator+(QTElement a, const QTElement& b) { return a += b; }
  friend QTElement operator-(QTElement a, const QTElement& b) { return a -= b; }
  friend QTElement operator*(const TPoly& c, QTElement a) { return a *= c; }
  QTElement operator-() const;
  friend bool operator==(const QTElement& a, const QTElement& b) { return a.terms_ == b.terms_; }

  /// e-basis form, e.g. "e(1,1) + t^-3*e(1,0)".
  std::string to_string() const;

 private:
  Terms terms_;
};

QTElement qt_mul(const QTElement& x, const QTElement& y);

/// e_{p,q} -> e_{-p,-q}; an involutive automorphism.
QTElement qt_theta(const QTElement& x);

/// l^a m^b as a torus element, i.e. t^{ab} e_{a,b}.
QTElement qt_monomial(Exponent a, Exponent b);

/// Left monomial factor l^a m^b used to clear negative exponents.
struct Shift {
  Exponent a = 0;
  Exponent b = 0;
  friend bool operator==(const Shift&, const Shift&) = default;
};

struct ClearedPoly {
  SymPlanePoly poly;
  Shift shift;
};

/// (l^a m^b) * x with a, b the least values making every exponent nonnegative.
/// Throws std::invalid_argument for x = 0.
ClearedPoly clear_to_plane(const QTElement& x);

/// Embed a plane polynomial with Laurent-polynomial coefficients back into the torus.
/// Throws std::invalid_argument if some coefficient is not a Laurent polynomial.
QTElement from_plane(const SymPlanePoly& f);

}  // namespace qtorus
