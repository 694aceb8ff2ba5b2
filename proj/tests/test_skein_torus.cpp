#include <doctest.h>

#include "support.hpp"

using namespace qtorus;

namespace {

SkeinElement L(Exponent p, Exponent q) {
  if (p == 0 && q == 0) return SkeinElement(TPoly(2));  // e_{0,0} + e_{0,0}
  return phat_curve(CurveIndex(p, q));
}

QTElement e(Exponent p, Exponent q) { return QTElement::basis(p, q); }

bool theta_invariant(const SkeinElement& s) { return qt_theta(s.value()) == s.value(); }

}  // namespace

TEST_SUITE("skein_torus") {

TEST_CASE("curves") {
  CHECK(phat_curve(CurveIndex(1, 0)).value() == e(1, 0) + e(-1, 0));
  CHECK(phat_curve(CurveIndex(-1, 0)) == phat_curve(CurveIndex(1, 0)));
  CHECK(phat_curve(CurveIndex(0, 1)).value() == qt_monomial(0, 1) + qt_monomial(0, -1));
  CHECK_THROWS_AS(CurveIndex(0, 0), std::invalid_argument);
  CHECK(CurveIndex(-2, 3).canonical() == CurveIndex(2, -3));
  CHECK(CurveIndex(0, -1).canonical() == CurveIndex(0, 1));
  CHECK(CurveIndex(0, 1).is_canonical());
  CHECK_FALSE(CurveIndex(-1, 5).is_canonical());
}

TEST_CASE("only Theta-invariant elements are skeins") {
  CHECK_THROWS_AS(SkeinElement::from_qt(e(1, 0)), std::invalid_argument);
  CHECK_NOTHROW(SkeinElement::from_qt(e(1, 0) + e(-1, 0)));
}

TEST_CASE("products of curves") {
  const TPoly t = TPoly::t(1), ti = TPoly::t(-1);
  // the quantum-torus order
  CHECK(qt_mul(L(1, 0).value(), L(0, 1).value()) == (t * L(1, 1) + ti * L(1, -1)).value());
  // the stacking order used for skeins composes the other way round
  CHECK(skein_mul(L(1, 0), L(0, 1)) == ti * L(1, 1) + t * L(1, -1));
  CHECK(skein_mul(L(1, 0), L(0, 1), Stacking::Flipped) == t * L(1, 1) + ti * L(1, -1));
  CHECK(skein_mul(L(1, 0), L(1, 1), Stacking::Flipped) == t * L(2, 1) + ti * L(0, 1));
  CHECK(skein_mul(L(2, 3), SkeinElement::unit()) == L(2, 3));
  CHECK(skein_mul(SkeinElement::unit(), L(2, 3)) == L(2, 3));
}

TEST_CASE("product-to-sum law") {
  for (Exponent p = 1; p <= 8; ++p)
    for (Exponent q = -8; q <= 8; ++q) {
      const SkeinElement lhs = SkeinElement::from_qt(qt_mul(L(1, 0).value(), L(p - 1, q).value()));
      CHECK(lhs == TPoly::t(q) * L(p, q) + TPoly::t(-q) * L(p - 2, q));
    }
}

TEST_CASE("presentation relators") {
  for (const auto& r : bp_relators()) CHECK(r.is_zero());
  const auto flipped = bp_relators(Stacking::Flipped);
  const TPoly spread = TPoly::t(2) - TPoly::t(-2);
  CHECK(flipped[1] == (spread * (L(1, -1) - L(1, 1))).value());
  for (const auto& r : flipped) CHECK_FALSE(r.is_zero());
  CHECK(bp_relator_names()[1] == "txy - t^-1yx - (t^2 - t^-2)z");
}

TEST_CASE("Theta-invariance is closed under products") {
  testing::Rng r(41);
  for (int i = 0; i < 50; ++i) {
    const SkeinElement a = testing::random_skein(r), b = testing::random_skein(r);
    CHECK(theta_invariant(skein_mul(a, b)));
    CHECK(theta_invariant(skein_mul(a, b, Stacking::Flipped)));
  }
}

TEST_CASE("commutative at t = -1") {
  testing::Rng r(42);
  for (int i = 0; i < 50; ++i) {
    const SkeinElement a = testing::random_skein(r), b = testing::random_skein(r);
    const QTElement d = skein_mul(a, b).value() - skein_mul(b, a).value();
    for (const auto& [pq, c] : d.terms()) CHECK(c.specialize(-1) == 0);
  }
}

TEST_CASE("swapping the torus cycles") {
  CHECK(swap_cycles(L(1, 0) + TPoly::t(2) * L(2, -1)) == L(0, 1) + TPoly::t(2) * L(-1, 2));
  testing::Rng r(43);
  for (int i = 0; i < 20; ++i) {
    const SkeinElement a = testing::random_skein(r);
    CHECK(swap_cycles(swap_cycles(a)) == a);
  }
}

TEST_CASE("parsing skein expressions") {
  CHECK(parse_skein("L(1,1) + t^-3 * L(1,0)") == L(1, 1) + TPoly::t(-3) * L(1, 0));
  CHECK(parse_skein("L(0,1)+t^2+t^-2") == L(0, 1) + SkeinElement(TPoly::t(2) + TPoly::t(-2)));
  CHECK(parse_skein("-3/2*t*L(-1,0)") == TPoly::monomial(testing::rat(-3, 2), 1) * L(1, 0));
  CHECK(parse_skein("L(1,0)*L(0,1)") == skein_mul(L(1, 0), L(0, 1)));
  CHECK(parse_skein("(t + 1)*(L(1,0) - 2)") ==
        (TPoly::t(1) + TPoly(1)) * (L(1, 0) - SkeinElement(TPoly(2))));
  CHECK(parse_skein(" 0 ").is_zero());
  CHECK(parse_skein("L(2,2)") == L(2, 2));

  auto column_of = [](const char* text) {
    try {
      (void)parse_skein(text);
    } catch (const ParseError& e) {
      return e.column();
    }
    return std::size_t{0};
  };
  CHECK(column_of("L(1,1) + t^-3*L(1,") == 19);
  CHECK(column_of("L(0,0)") == 3);
  CHECK(column_of("L(1,1) $") == 8);
  CHECK(column_of("") == 1);
  CHECK(column_of("1/0") == 3);
  CHECK(column_of("(L(1,0)") == 8);
}

TEST_CASE("printing") {
  CHECK((L(1, 1) + TPoly::t(-3) * L(1, 0)).to_string() == "L(1,1) + t^-3*L(1,0)");
  CHECK((L(0, 1) + SkeinElement(TPoly::t(2) + TPoly::t(-2))).to_string() == "L(0,1) + (t^2 + t^-2)");
  CHECK(SkeinElement().to_string() == "0");
}

}  // TEST_SUITE
