// Exact arithmetic layers: rationals, polynomials in the parameter h, and
// the rational functions in h used transiently during elimination.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oq/error.hpp"
#include "oq/hpoly.hpp"
#include "testutil.hpp"

using namespace oq;
using oqtest::Q;

TEST_CASE("rational arithmetic is exact and normalized") {
  CHECK(Q("1/3") + Q("1/6") == Q("1/2"));
  CHECK(Q("2/4") == Q("1/2"));
  CHECK(Q("-3/-6") == Q("1/2"));
  CHECK(Q("7") * Q("1/7") == Rational(1));
  CHECK((Q("5/3") - Q("5/3")).is_zero());
  CHECK(Q("-2/3").str() == "-2/3");
  CHECK(Q("4/2").str() == "2");
  CHECK(Q("1/2") < Q("2/3"));
  CHECK(Q("-1") < Q("1/1000000000000000000000"));
  CHECK(Q("0").is_zero());
  CHECK(Q("1").is_one());
  CHECK(Q("5").is_integer());
  CHECK(!Q("5/2").is_integer());
  CHECK(Q("3/4").inv() == Q("4/3"));
  CHECK(Q("-3/4").numerator() == BigInt(-3));
  CHECK(Q("-3/4").denominator() == BigInt(4));
}

TEST_CASE("rational parsing rejects malformed input") {
  CHECK_THROWS_AS(Rational::parse(""), Error);
  CHECK_THROWS_AS(Rational::parse("a/b"), Error);
  CHECK_THROWS_AS(Rational::parse("1/"), Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), Error);
  try {
    Rational::parse("x");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
  }
}

TEST_CASE("big integers do not overflow") {
  Rational big = Q("1");
  for (int i = 0; i < 40; ++i) big *= Q("1000000");
  Rational inv = big.inv();
  CHECK((big * inv).is_one());
  CHECK(big.numerator().str().size() == 241);  // 1 followed by 240 zeros
}

TEST_CASE("parameter polynomials multiply and compare exactly") {
  HPoly one(Rational(1));
  HPoly h = HPoly::h();
  HPoly p = one;  // 1
  p += h;         // 1 + h
  HPoly q = p * p;
  HPoly expect(Rational(1));
  expect += HPoly(Rational(2), 1);
  expect += HPoly(Rational(1), 2);
  CHECK(q == expect);
  CHECK(q.degree() == 2);
  CHECK(!q.is_zero());
  CHECK((q - q).is_zero());
  CHECK(q.eval(Rational(1)) == Rational(4));
  CHECK(q.eval(Q("-1")).is_zero());
  CHECK(q.eval(Q("1/2")) == Q("9/4"));
  CHECK(q.constant_term() == Rational(1));
  CHECK(q.str() == "1 + 2*h + h^2");
}

TEST_CASE("parameter polynomial division and gcd are exact") {
  HPoly h = HPoly::h();
  HPoly a = (HPoly(Rational(1)) + h) * (HPoly(Rational(2)) + h);  // (1+h)(2+h)
  HPoly quot;
  REQUIRE(a.try_divide(HPoly(Rational(1)) + h, quot));
  CHECK(quot == HPoly(Rational(2)) + h);
  HPoly dummy;
  CHECK(!a.try_divide(HPoly(Rational(3)) + h, dummy));
  HPoly g = HPoly::gcd(a, (HPoly(Rational(1)) + h).times_h_power(1));
  CHECK(g == HPoly(Rational(1)) + h);  // gcd is normalized monic
  HPoly q2, r2;
  a.divmod(h, q2, r2);
  CHECK(q2 == HPoly(Rational(3)) + h);
  CHECK(r2 == HPoly(Rational(2)));
}

TEST_CASE("rational functions in the parameter stay normalized") {
  HPoly h = HPoly::h();
  HRat f(HPoly(Rational(1)) + h, h);          // (1+h)/h
  HRat g(h.times_h_power(1), h + h);          // h^2/2h = h/2
  CHECK(g.is_polynomial());
  CHECK(g.num() == HPoly(Q("1/2"), 1));
  HRat prod = f * g;                          // (1+h)/2
  CHECK(prod.is_polynomial());
  CHECK(prod.num() == (HPoly(Q("1/2")) + HPoly(Q("1/2"), 1)));
  CHECK((f - f).is_zero());
  CHECK(f.inv() * f == HRat(HPoly(Rational(1))));
  HRat a(HPoly(Rational(1)), HPoly(Rational(1)) + h);
  HRat b(HPoly(Rational(1)), HPoly(Rational(2)) + h);
  HRat sum = a + b;  // (3+2h) / ((1+h)(2+h))
  CHECK(sum.num() == HPoly(Rational(3)) + HPoly(Rational(2), 1));
  CHECK(!sum.is_polynomial());
}
