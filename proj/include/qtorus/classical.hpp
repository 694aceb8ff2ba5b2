// Commutative Laurent polynomials in l, m over Q: the t = -1 side of the bridge.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtorus/coefficients.hpp"
#include "qtorus/quantum_plane.hpp"

namespace qtorus {

class ClassicalPoly {
 public:
  using Terms = std::map<PowerProduct, Rational>;

  ClassicalPoly() = default;
  ClassicalPoly(const Rational& c);  // NOLINT
  ClassicalPoly(long c) : ClassicalPoly(Rational(c)) {}  // NOLINT

  static ClassicalPoly monomial(const Rational& c, Exponent p, Exponent q);
  static ClassicalPoly l() { return monomial(1, 1, 0); }
  static ClassicalPoly m() { return monomial(1, 0, 1); }
  /// Plane polynomial read commutatively (valid at t^2 = 1).
  static ClassicalPoly from_plane(const NumPlanePoly& f);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool has_negative_exponents() const;

  ClassicalPoly& operator+=(const ClassicalPoly& o);
  ClassicalPoly& operator-=(const ClassicalPoly& o);
  friend ClassicalPoly operator+(ClassicalPoly a, const ClassicalPoly& b) { return a += b; }
  friend ClassicalPoly operator-(ClassicalPoly a, const ClassicalPoly& b) { return a -= b; }
  friend ClassicalPoly operator*(const ClassicalPoly& a, const ClassicalPoly& b);
  ClassicalPoly operator-() const;
  friend bool operator==(const ClassicalPoly&, const ClassicalPoly&) = default;

  Rational evaluate(const Rational& l, const Rational& m) const;

  /// Integer-coprime coefficients with positive leading coefficient (lex, l > m).
  ClassicalPoly normalized() const;

  /// l -> -m, m -> -l.
  ClassicalPoly swap_negate() const;

  std::string to_string() const;

 private:
  Terms terms_;
};

/// Generator of the smallest principal ideal containing ps: their GCD, normalized.
/// Throws std::invalid_argument if every input is zero or has negative exponents.
ClassicalPoly classical_gcd(const std::vector<ClassicalPoly>& ps);

/// Exact quotient by (l - 1), or nullopt if l - 1 does not divide f.
std::optional<ClassicalPoly> divide_by_l_minus_one(const ClassicalPoly& f);

/// x^2 + y^2 + z^2 - xyz - constant under x = l + 1/l, y = m + 1/m, z = lm + 1/(lm).
ClassicalPoly character_relation_image(const Rational& constant = 4);

}  // namespace qtorus
