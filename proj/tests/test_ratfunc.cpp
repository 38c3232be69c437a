#include <doctest.h>

#include <cmath>

#include "dfm/errors.hpp"
#include "oracle.hpp"

using namespace dfm;
using oracle::rf;

namespace {
Poly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Poly(v);
}
}  // namespace

TEST_CASE("normalize cancels and makes the denominator monic") {
  auto a = RatFunc::normalize(P({2, 2}), P({2}));
  CHECK(a.num() == P({1, 1}));
  CHECK(a.den() == P({1}));
  auto b = RatFunc::normalize(P({-1, 0, 1}), P({-1, 1}));
  CHECK(b.num() == P({1, 1}));
  CHECK(b.den() == P({1}));
  auto c = RatFunc::normalize(P({0, 3}), P({0, 0, 6}));
  CHECK(c.num() == Poly(Rational(1, 2)));
  CHECK(c.den() == P({0, 1}));
  // cross-multiplication: 3t * t == 6t^2 * 1/2
  CHECK(P({0, 3}) * c.den() == P({0, 0, 6}) * c.num());
  CHECK_THROWS_AS(RatFunc::normalize(P({1}), Poly()), ZeroDenominator);
}

TEST_CASE("field arithmetic examples") {
  RatFunc t = RatFunc::t();
  CHECK(t + inverse(t) == rf("(t^2+1)/t"));
  CHECK((t - 1) * inverse(t - 1) == RatFunc(1));
  CHECK((t * t + t) / t == t + 1);
  CHECK_THROWS_AS(inverse(RatFunc()), DivisionByZero);
  CHECK_THROWS_AS(t / RatFunc(), DivisionByZero);
}

TEST_CASE("derivative examples") {
  CHECK(derive(rf("t^2")) == rf("2*t"));
  CHECK(derive(RatFunc(5)).is_zero());
  CHECK(derive(rf("(t^2+1)/(t-1)")) == rf("(t^2-2*t-1)/(t-1)^2"));
  CHECK(derive(rf("t^3"), 2) == rf("6*t"));
}

TEST_CASE("evaluation examples") {
  CHECK(eval(rf("t^2/(t-1)"), Rational(2)) == Rational(4));
  CHECK_THROWS_AS(eval(rf("1/t"), Rational(0)), PoleAtPoint);
  CHECK(eval(rf("(t^2-2*t-1)/(t-1)^2"), Rational(3)) == Rational(1, 2));
}

TEST_CASE("constancy examples") {
  CHECK(rf("7/2").is_constant());
  CHECK_FALSE(rf("t").is_constant());
  CHECK(rf("(2*t+2)/(t+1)").is_constant());
  CHECK(rf("(2*t+2)/(t+1)") == RatFunc(2));
}

TEST_CASE("parser") {
  CHECK(rf("1/(t-1) + t") == RatFunc::normalize(P({1, -1, 1}), P({-1, 1})));
  CHECK(rf("-t^2") == -(RatFunc::t() * RatFunc::t()));
  CHECK(rf("(-t)^2") == RatFunc::t() * RatFunc::t());
  CHECK(rf(" 3 / 6 ") == RatFunc(Rational(1, 2)));
  CHECK(rf("2*t^0") == RatFunc(2));
  try {
    parse_ratfunc("t^");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.column() == 2);
    CHECK(e.line() == 1);
  }
  try {
    parse_ratfunc("t + x");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.column() == 5);
    CHECK(e.token() == "x");
  }
  CHECK_THROWS_AS(parse_ratfunc("1/(t-t)"), ParseError);
  CHECK_THROWS_AS(parse_ratfunc("(t+1"), ParseError);
  CHECK_THROWS_AS(parse_ratfunc(""), ParseError);
  CHECK_THROWS_AS(parse_ratfunc("t^-1"), ParseError);
}

TEST_CASE("string form reparses to the same value") {
  oracle::Gen g(11);
  for (int i = 0; i < 200; ++i) {
    RatFunc f = g.ratfunc(3);
    CHECK(parse_ratfunc(f.str()) == f);
  }
  CHECK(rf("(t^2+1)/(t-1)").str() == "(t^2+1)/(t-1)");
  CHECK(rf("1/t").str() == "1/t");
}

TEST_CASE("field and derivation axioms on random operands") {
  oracle::Gen g(1);
  for (int i = 0; i < 150; ++i) {
    RatFunc a = g.ratfunc(), b = g.ratfunc(), c = g.ratfunc();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == RatFunc());
    if (!a.is_zero()) CHECK(a * inverse(a) == RatFunc(1));
    CHECK(derive(a + b) == derive(a) + derive(b));
    CHECK(derive(a * b) == derive(a) * b + a * derive(b));
    CHECK(derive(a) == oracle::naive_derive(a));
    // canonical values are fixed points of normalize
    CHECK(RatFunc::normalize(a.num(), a.den()) == a);
    CHECK(a.den().is_monic());
    CHECK(gcd(a.num(), a.den()).degree() <= 0);
    CHECK(a.is_constant() == derive(a).is_zero());
  }
}

TEST_CASE("derivative agrees with central differences") {
  oracle::Gen g(2);
  auto horner = [](const Poly& p, double y) {
    double acc = 0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * y + it->to_double();
    return acc;
  };
  int tested = 0;
  for (int i = 0; i < 100; ++i) {
    RatFunc f = g.ratfunc();
    const Rational t0(g.small(-9, 9), 4);
    const double x = t0.to_double();
    // stay well away from poles so the difference quotient is smooth
    if (std::abs(horner(f.den(), x)) < 0.5 || std::abs(horner(f.den(), x + 0.01)) < 0.5 ||
        std::abs(horner(f.den(), x - 0.01)) < 0.5)
      continue;
    auto fe = [&](double y) { return horner(f.num(), y) / horner(f.den(), y); };
    const double exact = eval(derive(f), t0).to_double();
    for (double h : {1e-2, 1e-3}) {
      double fd = (fe(x + h) - fe(x - h)) / (2 * h);
      CHECK(std::abs(fd - exact) <= 1e3 * h * (1 + std::abs(exact)));
    }
    ++tested;
  }
  CHECK(tested > 20);
}
