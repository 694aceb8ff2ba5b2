// Kauffman bracket skein algebra of T^2 x I, realized as the Theta-invariant
// subalgebra of the quantum torus: L_{p,q} -> e_{p,q} + e_{-p,-q}.
#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qtorus/quantum_torus.hpp"

namespace qtorus {

/// Index of the (p,q) curve; (p,q) and (-p,-q) name the same curve.
class CurveIndex {
 public:
  /// Throws std::invalid_argument for (0,0).
  CurveIndex(Exponent p, Exponent q);

  Exponent p() const { return p_; }
  Exponent q() const { return q_; }
  /// Representative with p > 0, or p = 0 and q > 0.
  CurveIndex canonical() const;
  bool is_canonical() const { return p_ > 0 || (p_ == 0 && q_ > 0); }

  friend bool operator==(const CurveIndex&, const CurveIndex&) = default;

 private:
  Exponent p_;
  Exponent q_;
};

class SkeinElement {
 public:
  SkeinElement() = default;
  SkeinElement(const TPoly& c) : value_(c) {}  // NOLINT: scalar multiple of the empty skein

  /// Throws std::invalid_argument unless Theta(x) = x.
  static SkeinElement from_qt(const QTElement& x);
  static SkeinElement unit() { return SkeinElement(TPoly(1)); }

  const QTElement& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }

  SkeinElement& operator+=(const SkeinElement& o) { value_ += o.value_; return *this; }
  SkeinElement& operator-=(const SkeinElement& o) { value_ -= o.value_; return *this; }
  SkeinElement& operator*=(const TPoly& c) { value_ *= c; return *this; }
  friend SkeinElement operator+(SkeinElement a, const SkeinElement& b) { return a += b; }
  friend SkeinElement operator-(SkeinElement a, const SkeinElement& b) { return a -= b; }
  friend SkeinElement operator*(const TPoly& c, SkeinElement a) { return a *= c; }
  friend bool operator==(const SkeinElement&, const SkeinElement&) = default;

  /// Curve-basis form, e.g. "L(1,1) + t^-3*L(1,0)"; the e_{0,0} part prints as a scalar.
  std::string to_string() const;

 private:
  QTElement value_;
};

/// e_{p,q} + e_{-p,-q}. (0,0) is rejected by CurveIndex.
SkeinElement phat_curve(CurveIndex c);

/// Which factor of a skein product is composed first in the quantum torus.
///
/// Standard is the convention under which the Bullock-Przytycki relators hold
/// with x = L(0,1), y = L(1,0), z = L(1,1): a.b = qt_mul(b, a).
enum class Stacking { Standard, Flipped };

SkeinElement skein_mul(const SkeinElement& a, const SkeinElement& b,
                       Stacking order = Stacking::Standard);

/// The four presentation relators evaluated in the quantum torus, in the order
/// cubic, [x,y], [z,x], [y,z]. All vanish under Stacking::Standard.
std::array<QTElement, 4> bp_relators(Stacking order = Stacking::Standard);
std::array<std::string, 4> bp_relator_names();

/// (p,q) -> (q,p) on every curve: exchanges the roles of the two torus cycles.
SkeinElement swap_cycles(const SkeinElement& s);

/// Parse error with a 1-based column into the expression text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : std::runtime_error(what + " at column " + std::to_string(column)), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Parse sums of scaled products of curves, e.g. "L(1,1) + t^-3 * L(1,0)".
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := integer ['/' integer] | 't' ['^' ['-'] integer]
///           | 'L(' integer ',' integer ')' | '(' expr ')'
///
/// Curve products use skein_mul with Stacking::Standard.
SkeinElement parse_skein(std::string_view text);

}  // namespace qtorus
