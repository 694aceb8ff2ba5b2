// Exact coefficient arithmetic: Laurent polynomials in the quantum parameter t
// over Q, and their field of fractions.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qtorus {

using Rational = mpq_class;
using Exponent = std::int64_t;

/// Checked exponent arithmetic; throws std::overflow_error.
Exponent exp_add(Exponent a, Exponent b);
Exponent exp_mul(Exponent a, Exponent b);

/// Exact power t0^k for k of either sign. Throws std::domain_error if t0 = 0 and k < 0.
Rational rational_pow(const Rational& base, Exponent k);

/// Sum of c_k t^k with finitely many nonzero rational c_k.
///
/// The term map never stores a zero coefficient, so structural equality is
/// value equality.
class TPoly {
 public:
  using Terms = std::map<Exponent, Rational>;

  TPoly() = default;
  TPoly(const Rational& c);  // NOLINT: constants embed implicitly
  TPoly(long c) : TPoly(Rational(c)) {}  // NOLINT
  TPoly(int c) : TPoly(Rational(c)) {}   // NOLINT

  /// Canonical form of a raw term list: like exponents combined, zeros dropped.
  static TPoly normalize(const std::vector<std::pair<Exponent, Rational>>& raw);
  static TPoly monomial(const Rational& c, Exponent k);
  /// t^k
  static TPoly t(Exponent k = 1) { return monomial(1, k); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t size() const { return terms_.size(); }
  /// Single term c t^k: the units of the Laurent ring.
  bool is_monomial() const { return terms_.size() == 1; }

  // Valid only for nonzero polynomials.
  Exponent degree() const { return terms_.rbegin()->first; }
  Exponent low_degree() const { return terms_.begin()->first; }
  const Rational& leading_coeff() const { return terms_.rbegin()->second; }

  Rational coeff(Exponent k) const;

  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  TPoly& operator*=(const TPoly& o);
  TPoly& operator*=(const Rational& c);

  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  friend TPoly operator*(TPoly a, const Rational& c) { return a *= c; }
  friend TPoly operator*(const Rational& c, TPoly a) { return a *= c; }
  TPoly operator-() const;

  friend bool operator==(const TPoly& a, const TPoly& b) { return a.terms_ == b.terms_; }

  /// Multiply by t^k.
  TPoly shifted(Exponent k) const;
  /// p(t) -> p(t^-1).
  TPoly inverted() const;

  /// Value at t = t0, exact. Throws std::domain_error for t0 = 0.
  Rational specialize(const Rational& t0) const;

  /// Exact quotient a / b in the Laurent ring, or nullopt if b does not divide a.
  std::optional<TPoly> divide_exact(const TPoly& divisor) const;

  /// GCD in the Laurent ring, normalized: constant term nonzero (low degree 0)
  /// and leading coefficient 1. gcd(0, 0) = 0.
  static TPoly gcd(const TPoly& a, const TPoly& b);

  std::string to_string() const;

 private:
  Terms terms_;
};

TPoly tp_mul(const TPoly& a, const TPoly& b);
Rational tp_specialize(const TPoly& p, const Rational& t0);

std::ostream& operator<<(std::ostream& os, const TPoly& p);

/// Reduced fraction num/den of Laurent polynomials.
///
/// Canonical: gcd(num, den) = 1, den has nonzero constant term and leading
/// coefficient 1, and num = 0 forces den = 1.
class TRat {
 public:
  TRat() : den_(1) {}
  TRat(const TPoly& p) : num_(p), den_(1) {}  // NOLINT
  TRat(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  TRat(long c) : TRat(Rational(c)) {}  // NOLINT
  TRat(int c) : TRat(Rational(c)) {}   // NOLINT
  /// Throws std::domain_error if den = 0.
  TRat(const TPoly& num, const TPoly& den);

  const TPoly& num() const { return num_; }
  const TPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  TRat& operator+=(const TRat& o);
  TRat& operator-=(const TRat& o);
  TRat& operator*=(const TRat& o);
  TRat& operator/=(const TRat& o);

  friend TRat operator+(TRat a, const TRat& b) { return a += b; }
  friend TRat operator-(TRat a, const TRat& b) { return a -= b; }
  friend TRat operator*(TRat a, const TRat& b) { return a *= b; }
  friend TRat operator/(TRat a, const TRat& b) { return a /= b; }
  TRat operator-() const;
  TRat inverse() const;

  friend bool operator==(const TRat& a, const TRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Throws std::domain_error if t0 = 0 or den(t0) = 0.
  Rational specialize(const Rational& t0) const;

  std::string to_string() const;

 private:
  void canonicalize();

  TPoly num_;
  TPoly den_;
};

std::ostream& operator<<(std::ostream& os, const TRat& r);

inline bool is_zero(const TRat& r) { return r.is_zero(); }
inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(const TPoly& p) { return p.is_zero(); }

/// Dense polynomial over Q in one variable, index = degree. Used for GCDs.
namespace dense {

using UPoly = std::vector<Rational>;

void trim(UPoly& p);
bool is_zero(const UPoly& p);
long degree(const UPoly& p);  // -1 for zero
UPoly add(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly scale(const UPoly& a, const Rational& c);
/// Quotient and remainder over Q. Divisor must be nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic GCD; gcd(0,0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

}  // namespace dense

}  // namespace qtorus
