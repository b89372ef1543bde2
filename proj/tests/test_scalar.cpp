#include "doctest.h"
#include "support.hpp"

using namespace ej;
using ej::test::q;

TEST_CASE("scalar addition") {
  CHECK(q("1/2") + q("1/3") == q("5/6"));
  CHECK((q("1i") + q("-1i")).isZero());
  CHECK(q("2/3+1/5i") + q("1/3+4/5i") == q("1+1i"));
}

TEST_CASE("scalar multiplication") {
  CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
  CHECK(q("1/2") * q("2") == GaussianRational(1));
  CHECK(q("1+1i") * q("1-1i") == GaussianRational(2));
}

TEST_CASE("scalar inverse") {
  CHECK(inv(q("2")) == q("1/2"));
  CHECK(inv(GaussianRational::i()) == q("-1i"));
  CHECK(inv(q("3/4")) == q("4/3"));
  CHECK_THROWS_AS(inv(GaussianRational()), DivisionByZero);
  CHECK_THROWS_AS(q("1") / q("0"), DivisionByZero);
}

TEST_CASE("scalar parsing") {
  CHECK(q("3/4") == GaussianRational(Rational(3, 4)));
  CHECK(q("-1/2+2/3i") == GaussianRational(Rational(-1, 2), Rational(2, 3)));
  CHECK(q("5") == GaussianRational(5));
  CHECK(q("0-1/1i") == q("-1i"));
  CHECK(q("2/4") == q("1/2"));
  CHECK(q("1+-2i") == q("1-2i"));

  SUBCASE("stored reduced with positive denominator") {
    GaussianRational x(Rational(6, -4));
    CHECK(x.real().get_den() == 2);
    CHECK(x.real().get_num() == -3);
  }

  SUBCASE("malformed input reports a position") {
    for (const char* bad : {"", "i", "+1", "1/", "1/0", "1 ", " 1", "1+2", "1+2j", "1/2i3", "--1", "1.5", "1+i"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(GaussianRational::parse(bad), ParseError);
    }
    try {
      GaussianRational::parse("12x");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 2);
    }
  }
}

TEST_CASE("scalar formatting") {
  CHECK(q("5").toString() == "5");
  CHECK(q("-3/7").toString() == "-3/7");
  CHECK(q("1/2+1/3i").toString() == "1/2+1/3i");
  CHECK(q("0-1i").toString() == "-1i");
  CHECK(q("2-1/2i").toString() == "2-1/2i");
  CHECK(GaussianRational().toString() == "0");
}

TEST_CASE("exact square roots") {
  CHECK(sqrtExact(q("9/4")) == q("3/2"));
  CHECK(sqrtExact(q("-4")) == q("2i"));
  CHECK(sqrtExact(q("2i")) == q("1+1i"));
  CHECK(sqrtExact(q("3+4i")) == q("2+1i"));
  CHECK(sqrtExact(q("-3-4i")) == q("1-2i"));
  CHECK_FALSE(sqrtExact(q("2")).has_value());
  CHECK_FALSE(sqrtExact(q("1+1i")).has_value());
}

TEST_CASE("field axioms hold exactly on random values") {
  test::Random rnd(1234);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = rnd.scalar();
    const auto b = rnd.scalar();
    const auto c = rnd.scalar();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.isZero()) CHECK(a * inv(a) == GaussianRational(1));
    CHECK(GaussianRational::parse(a.toString()) == a);
    if (auto r = sqrtExact(a * a)) CHECK(*r * *r == a * a);
  }
}

TEST_CASE("ordering is lexicographic on (re, im)") {
  CHECK(q("1") < q("2"));
  CHECK(q("1-5i") < q("1"));
  CHECK(q("-1i") < q("1i"));
  CHECK(q("-1/2+9i") < q("-1/3"));
}
