#include "qtorus/skein_torus.hpp"

#include <cctype>
#include <sstream>

namespace qtorus {

CurveIndex::CurveIndex(Exponent p, Exponent q) : p_(p), q_(q) {
  if (p == 0 && q == 0) throw std::invalid_argument("curve index (0,0) is not a curve");
}

CurveIndex CurveIndex::canonical() const {
  return is_canonical() ? *this : CurveIndex(-p_, -q_);
}

SkeinElement SkeinElement::from_qt(const QTElement& x) {
  if (!(qt_theta(x) == x))
    throw std::invalid_argument("element is not Theta-invariant: " + x.to_string());
  SkeinElement s;
  s.value_ = x;
  return s;
}

std::string SkeinElement::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = value_.terms().rbegin(); it != value_.terms().rend(); ++it) {
    const auto& [pq, c] = *it;
    const bool constant = pq.p == 0 && pq.q == 0;
    if (!constant && !CurveIndex(pq.p, pq.q).is_canonical()) continue;
    const bool simple = c.is_monomial();
    const bool negative = simple && sgn(c.leading_coeff()) < 0;
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << '-';
    const TPoly mag = negative ? -c : c;
    if (constant) {
      os << (simple || first ? mag.to_string() : "(" + mag.to_string() + ")");
    } else {
      if (!mag.is_one()) os << (simple ? mag.to_string() : "(" + mag.to_string() + ")") << '*';
      os << "L(" << pq.p << ',' << pq.q << ')';
    }
    first = false;
  }
  return os.str();
}

SkeinElement phat_curve(CurveIndex c) {
  return SkeinElement::from_qt(QTElement::basis(c.p(), c.q()) + QTElement::basis(-c.p(), -c.q()));
}

SkeinElement skein_mul(const SkeinElement& a, const SkeinElement& b, Stacking order) {
  const QTElement prod = order == Stacking::Standard ? qt_mul(b.value(), a.value())
                                                     : qt_mul(a.value(), b.value());
  return SkeinElement::from_qt(prod);
}

std::array<QTElement, 4> bp_relators(Stacking order) {
  const SkeinElement x = phat_curve({0, 1});
  const SkeinElement y = phat_curve({1, 0});
  const SkeinElement z = phat_curve({1, 1});
  auto mul = [order](const SkeinElement& a, const SkeinElement& b) { return skein_mul(a, b, order); };
  const TPoly t = TPoly::t(1), ti = TPoly::t(-1);
  const TPoly t2 = TPoly::t(2), ti2 = TPoly::t(-2);
  const TPoly spread = t2 - ti2;

  const SkeinElement cubic = t2 * mul(x, x) + ti2 * mul(y, y) + t2 * mul(z, z) -
                             t * mul(mul(x, y), z) - SkeinElement(TPoly(2) * (t2 + ti2));
  const SkeinElement xy = t * mul(x, y) - ti * mul(y, x) - spread * z;
  const SkeinElement zx = t * mul(z, x) - ti * mul(x, z) - spread * y;
  const SkeinElement yz = t * mul(y, z) - ti * mul(z, y) - spread * x;
  return {cubic.value(), xy.value(), zx.value(), yz.value()};
}

std::array<std::string, 4> bp_relator_names() {
  return {"t^2x^2 + t^-2y^2 + t^2z^2 - txyz - 2(t^2 + t^-2)", "txy - t^-1yx - (t^2 - t^-2)z",
          "tzx - t^-1xz - (t^2 - t^-2)y", "tyz - t^-1zy - (t^2 - t^-2)x"};
}

SkeinElement swap_cycles(const SkeinElement& s) {
  std::vector<std::pair<PowerProduct, TPoly>> raw;
  for (const auto& [pq, c] : s.value().terms()) raw.emplace_back(PowerProduct{pq.q, pq.p}, c);
  return SkeinElement::from_qt(QTElement::normalize(raw));
}

// ---------------------------------------------------------------- parser

namespace {

class SkeinParser {
 public:
  explicit SkeinParser(std::string_view text) : text_(text) {}

  SkeinElement parse() {
    SkeinElement e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }

  mpz_class integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Exponent small_integer() {
    const std::size_t start = pos_;
    const mpz_class v = integer();
    if (!v.fits_slong_p()) {
      pos_ = start;
      fail("integer out of range");
    }
    return v.get_si();
  }

  SkeinElement expr() {
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    SkeinElement sum = term();
    if (negate) sum = TPoly(-1) * sum;
    for (;;) {
      if (accept('+')) sum += term();
      else if (accept('-')) sum -= term();
      else return sum;
    }
  }

  SkeinElement term() {
    SkeinElement prod = factor();
    while (accept('*')) prod = skein_mul(prod, factor());
    return prod;
  }

  SkeinElement factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      SkeinElement inner = expr();
      expect(')');
      return inner;
    }
    if (ch == 't') {
      ++pos_;
      Exponent k = 1;
      if (accept('^')) k = small_integer();
      return SkeinElement(TPoly::t(k));
    }
    if (ch == 'L') {
      ++pos_;
      expect('(');
      const std::size_t at = pos_;
      const Exponent p = small_integer();
      expect(',');
      const Exponent q = small_integer();
      expect(')');
      if (p == 0 && q == 0) {
        pos_ = at;
        fail("L(0,0) is not a curve");
      }
      return phat_curve({p, q});
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const mpz_class num = integer();
      mpz_class den = 1;
      if (accept('/')) {
        const std::size_t at = pos_;
        den = integer();
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
      }
      Rational r(num, den);
      r.canonicalize();
      return SkeinElement(TPoly(r));
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SkeinElement parse_skein(std::string_view text) { return SkeinParser(text).parse(); }

}  // namespace qtorus
