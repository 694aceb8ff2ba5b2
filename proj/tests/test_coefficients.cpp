#include <doctest.h>

#include <limits>
#include <stdexcept>

#include "support.hpp"

using namespace qtorus;
using testing::rat;

TEST_SUITE("coefficients") {

TEST_CASE("normalize combines like exponents and drops zeros") {
  CHECK(TPoly::normalize({{2, 1}, {-2, 1}}) == TPoly::t(2) + TPoly::t(-2));
  CHECK(TPoly::normalize({{3, 0}, {0, 1}}) == TPoly(1));
  CHECK(TPoly::normalize({{1, 1}, {1, -1}}).is_zero());
  CHECK(TPoly::normalize({{1, 1}, {1, -1}}).terms().empty());
  CHECK(TPoly::normalize({{0, rat(1, 2)}, {0, rat(1, 3)}}) == TPoly(rat(5, 6)));
}

TEST_CASE("products") {
  const TPoly a = TPoly::t(1) + TPoly::t(-1);
  const TPoly b = TPoly::t(1) - TPoly::t(-1);
  CHECK(tp_mul(a, b) == TPoly::t(2) - TPoly::t(-2));
  CHECK(a * TPoly(1) == a);
  CHECK((a * TPoly()).is_zero());
}

TEST_CASE("specialization") {
  CHECK(tp_specialize(TPoly::t(2) + TPoly::t(-2), -1) == 2);
  CHECK(tp_specialize(TPoly::t(-3), -1) == -1);
  CHECK(tp_specialize(TPoly::t(2) - TPoly::t(-2), -1) == 0);
  CHECK(tp_specialize(TPoly::t(-2) + TPoly(3), rat(1, 2)) == 7);
  CHECK_THROWS_AS(tp_specialize(TPoly::t(1), 0), std::domain_error);
}

TEST_CASE("printing") {
  CHECK(TPoly().to_string() == "0");
  CHECK((TPoly::t(2) + TPoly::t(-2)).to_string() == "t^2 + t^-2");
  CHECK((TPoly::monomial(-1, 1) + TPoly(rat(3, 2))).to_string() == "-t + 3/2");
  CHECK(TRat(TPoly(1), TPoly::t(2) + TPoly(1)).to_string() == "(1)/(t^2 + 1)");
}

TEST_CASE("ring axioms on random inputs") {
  testing::Rng r(11);
  for (int i = 0; i < 200; ++i) {
    const TPoly a = testing::random_tpoly(r), b = testing::random_tpoly(r), c = testing::random_tpoly(r);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == TPoly());
  }
}

TEST_CASE("specialization is a ring homomorphism") {
  testing::Rng r(12);
  for (int i = 0; i < 200; ++i) {
    const TPoly a = testing::random_tpoly(r), b = testing::random_tpoly(r);
    for (const Rational t0 : {Rational(-1), rat(2, 3), Rational(5)}) {
      CHECK((a * b).specialize(t0) == a.specialize(t0) * b.specialize(t0));
      CHECK((a + b).specialize(t0) == a.specialize(t0) + b.specialize(t0));
    }
  }
}

TEST_CASE("exact division and gcd") {
  testing::Rng r(13);
  for (int i = 0; i < 100; ++i) {
    const TPoly a = testing::random_nonzero_tpoly(r), b = testing::random_nonzero_tpoly(r);
    const auto q = (a * b).divide_exact(b);
    REQUIRE(q);
    CHECK(*q == a);
    const TPoly g = TPoly::gcd(a * b, b);
    CHECK(g.low_degree() == 0);
    CHECK(g.leading_coeff() == 1);
    CHECK((a * b).divide_exact(g));
    CHECK(b.divide_exact(g));
  }
  for (int i = 0; i < 100; ++i) {
    const TPoly g = testing::random_nonzero_tpoly(r);
    const TPoly u = testing::random_nonzero_tpoly(r), v = testing::random_nonzero_tpoly(r);
    const TPoly d = TPoly::gcd(g * u, g * v);
    // the gcd is a multiple of every common factor, and the cofactors are coprime
    CHECK(d.divide_exact(g));
    CHECK(TPoly::gcd(*(g * u).divide_exact(d), *(g * v).divide_exact(d)) == TPoly(1));
  }
  CHECK_FALSE((TPoly::t(2) + TPoly(1)).divide_exact(TPoly::t(1) + TPoly(1)));
  CHECK(TPoly::gcd(TPoly(), TPoly()).is_zero());
  // units are invisible to the Laurent gcd
  CHECK(TPoly::gcd(TPoly::monomial(3, 5), TPoly::t(-2)) == TPoly(1));
}

TEST_CASE("fractions are canonical") {
  const TPoly u = TPoly::t(2) - TPoly::t(-2);
  const TPoly v = TPoly::t(1) - TPoly::t(-1);
  const TRat f(u, v);  // = t + t^-1
  CHECK(f.is_polynomial());
  CHECK(f.num() == TPoly::t(1) + TPoly::t(-1));
  const TRat g(TPoly(1), TPoly::monomial(-2, 3) + TPoly::monomial(4, 1));
  CHECK(g.den().low_degree() == 0);
  CHECK(g.den().leading_coeff() == 1);
  CHECK(TRat(TPoly(), u) == TRat());
  CHECK(TRat().den() == TPoly(1));
  CHECK_THROWS_AS(TRat(TPoly(1), TPoly()), std::domain_error);
}

TEST_CASE("field axioms on random fractions") {
  testing::Rng r(14);
  for (int i = 0; i < 100; ++i) {
    const TRat a = testing::random_trat(r), b = testing::random_trat(r), c = testing::random_trat(r);
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero() && !b.is_zero()) {
      CHECK((a / b) * (b / a) == TRat(1));
      CHECK(a * a.inverse() == TRat(1));
    }
    // equal values have equal representations
    CHECK(TRat(a.num() * b.num() + TPoly(1), a.den()) * TRat(a.den()) ==
          TRat(a.num() * b.num() + TPoly(1)));
  }
}

TEST_CASE("fraction specialization") {
  const TRat f(TPoly::t(2) + TPoly(1), TPoly::t(1) - TPoly(3));
  CHECK(f.specialize(-1) == rat(2, -4));
  CHECK_THROWS_AS(f.specialize(3), std::domain_error);
}

TEST_CASE("exponent arithmetic is checked") {
  const Exponent big = std::numeric_limits<Exponent>::max();
  CHECK_THROWS_AS(exp_add(big, 1), std::overflow_error);
  CHECK_THROWS_AS(exp_mul(big, 2), std::overflow_error);
  CHECK_THROWS_AS(TPoly::t(big) * TPoly::t(1), std::overflow_error);
  CHECK(exp_add(-3, 5) == 2);
  CHECK(rational_pow(rat(-1, 2), -3) == -8);
  CHECK_THROWS_AS(rational_pow(0, -1), std::domain_error);
}

}  // TEST_SUITE
