#include <doctest.h>

#include "dfm/classify.hpp"
#include "dfm/errors.hpp"
#include "generators.hpp"

using namespace dfm;
using oracle::mat;
using oracle::rf;

namespace {
bool parallel(const VecF& a, const VecF& b) {
  // a and b are F-multiples iff all 2x2 minors vanish
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
  return true;
}
VecF vec(std::initializer_list<const char*> s) {
  VecF v;
  for (auto* x : s) v.push_back(rf(x));
  return v;
}
VecF derive(const VecF& v) {
  VecF d;
  for (const auto& x : v) d.push_back(dfm::derive(x));
  return d;
}
}  // namespace

TEST_CASE("commutes with derivative examples") {
  CHECK(commutes_with_derivative(oracle::ma()));
  CHECK(commutes_with_derivative(oracle::a6()));
  MatF m = mat({{"0", "1"}, {"t", "0"}});
  CHECK_FALSE(commutes_with_derivative(m));
  MatF md = oracle::naive_derive(m);
  CHECK(oracle::naive_mul(m, md) - oracle::naive_mul(md, m) == mat({{"1", "0"}, {"0", "-1"}}));
}

TEST_CASE("pairwise commuting derivatives examples") {
  CHECK_FALSE(derivatives_pairwise_commute(oracle::ma(), 2));
  CHECK(derivatives_pairwise_commute(oracle::ma(), 1));
  CHECK(derivatives_pairwise_commute(oracle::lift(oracle::matk({{1, 2}, {3, 4}})), 4));
  CHECK(derivatives_pairwise_commute(mat({{"t", "0"}, {"0", "t^2"}}), 5));
}

TEST_CASE("type 1 examples") {
  CHECK_FALSE(is_type1(oracle::ma()).has_value());
  CHECK(is_type1(mat({{"t", "0"}, {"0", "t^2"}})).has_value());
  for (const char* c : {"1", "-3", "5/2"}) {
    MatF m = scale(MatF::identity(2), rf("t^2+1")) + scale(mat({{"0", "1"}, {"0", c}}), rf("1/t"));
    auto w = is_type1(m);
    REQUIRE(w.has_value());
    CHECK(w->reconstruct(2) == m);
    CHECK(w->constants_commute());
  }
  CHECK(is_type1(MatF(3, 3)).has_value());
}

TEST_CASE("type 2 examples") {
  auto w = is_type2(oracle::ma());
  REQUIRE(w.has_value());
  CHECK(parallel(w->f, vec({"t^2", "-2*t", "1"})));
  CHECK(parallel(w->g, vec({"1", "t", "t^2"})));
  CHECK(outer(w->f, w->g) == oracle::ma());
  CHECK(dot(w->f, w->g).is_zero());
  CHECK(dot(w->f, derive(w->g)).is_zero());
  CHECK_FALSE(is_type2(oracle::a6()).has_value());
  CHECK_FALSE(is_type2(MatF(3, 3)).has_value());
}

TEST_CASE("type 3 examples") {
  MatF m = scale(MatF::identity(3), RatFunc::t()) + oracle::ma();
  auto w = is_type3(m);
  REQUIRE(w.has_value());
  CHECK(w->h == RatFunc::t());
  CHECK(scale(MatF::identity(3), w->h) + outer(w->f, w->g) == m);
  CHECK_FALSE(is_type3(oracle::ma()).has_value());
  CHECK_FALSE(is_type3(mat({{"t", "0"}, {"0", "t^2"}})).has_value());
}

TEST_CASE("classify examples") {
  // 2x2 type 3 with f2 != 0: t I + t^3 (1,1)(1,-1)^T
  MatF m = scale(MatF::identity(2), RatFunc::t()) + scale(mat({{"1", "-1"}, {"1", "-1"}}), rf("t^3"));
  auto r = classify(m);
  CHECK(r.commutes_c1);
  CHECK(r.type3.has_value());
  CHECK(r.type1.has_value());

  for (const MatF& x : {oracle::m5(), oracle::m9()}) {
    auto rx = classify(x);
    CHECK(rx.commutes_c1);
    CHECK_FALSE(rx.type1.has_value());
    CHECK_FALSE(rx.type2.has_value());
    CHECK_FALSE(rx.type3.has_value());
    CHECK(rx.nilpotent);
    CHECK(rx.rank_over_F == 2);
  }
  auto ra = classify(oracle::ma());
  CHECK(ra.type2.has_value());
  CHECK_FALSE(ra.type1.has_value());
  CHECK_FALSE(ra.nonderogatory);
}

TEST_CASE("make_type2 examples") {
  MatF m = make_type2(vec({"1", "t", "t^2"}), 7);
  auto w = is_type2(m);
  REQUIRE(w.has_value());
  CHECK(parallel(w->f, vec({"1", "t", "t^2"})));
  CHECK(parallel(w->g, vec({"t^2", "-2*t", "1"})));
  CHECK(m == scale(oracle::ma().transpose(), m(0, 2) / oracle::ma()(2, 0)));

  MatF e = make_type2(vec({"1", "0", "0"}), 3);
  CHECK((e * e).is_zero());
  for (std::size_t i = 1; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(e(i, j).is_zero());
  CHECK(e(0, 0).is_zero());

  CHECK_THROWS_AS(make_type2(vec({"1", "t"}), 1), NoWitness);
  CHECK_THROWS_AS(make_type2(vec({"0", "0", "0"}), 1), NoWitness);
  CHECK(make_type2(vec({"1", "t", "t^2", "1/t"}), 5) == make_type2(vec({"1", "t", "t^2", "1/t"}), 5));
}

TEST_CASE("idempotent examples") {
  CHECK(idempotent_constancy_check(mat({{"1", "0"}, {"0", "0"}})));
  MatF n = mat({{"1", "t"}, {"0", "0"}});
  CHECK(n * n == n);
  CHECK_FALSE(idempotent_constancy_check(n));
  CHECK_THROWS_AS(idempotent_constancy_check(mat({{"t", "0"}, {"0", "0"}})), NotIdempotent);
}

TEST_CASE("make_type2 property") {
  oracle::Gen g(31);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = g.small(3, 5);
    VecF f(n);
    for (auto& x : f) x = g.ratfunc(2);
    MatF m;
    try {
      m = make_type2(f, g.rng());
    } catch (const NoWitness&) {
      continue;  // f = 0
    }
    MatF d = derive(m);
    CHECK((m * m).is_zero());
    CHECK((m * d).is_zero());
    CHECK((d * m).is_zero());
    CHECK(is_type2(m).has_value());
  }
}

TEST_CASE("nonderogatory with c1 implies type 1") {
  oracle::Gen g(32);
  int hits = 0;
  for (int i = 0; i < 40; ++i) {
    MatF m = gen::poly_in_constant(g, gen::companion(g, g.small(2, 4)));
    REQUIRE(commutes_with_derivative(m));
    if (!is_nonderogatory(m)) continue;
    ++hits;
    CHECK(is_type1(m).has_value());
  }
  CHECK(hits > 20);
  // pinned: a single nilpotent Jordan block scaled by a function
  MatF j = scale(mat({{"0", "1", "0"}, {"0", "0", "1"}, {"0", "0", "0"}}), rf("t/(t+1)"));
  CHECK(is_type1(j).has_value());
}

TEST_CASE("rank one, c1, not nilpotent implies type 1") {
  oracle::Gen g(33);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = g.small(2, 4);
    auto [t, ti] = g.unimodular(n);
    MatK e(n, n);
    e(0, 0) = Rational(1);
    MatF m = scale(oracle::lift(t * e * ti), gen::nonconst(g));
    REQUIRE(rank(m) == 1);
    REQUIRE(commutes_with_derivative(m));
    REQUIRE_FALSE(is_nilpotent(m));
    CHECK(is_type1(m).has_value());
  }
}

TEST_CASE("upper triangular 2x2 and 3x3 with c1 are type 1") {
  oracle::Gen g(34);
  for (int i = 0; i < 60; ++i) {
    MatF m2 = gen::upper2(g, i);
    REQUIRE(commutes_with_derivative(m2));
    CHECK(is_type1(m2).has_value());
    MatF m3 = gen::upper3(g, i);
    REQUIRE(commutes_with_derivative(m3));
    CHECK(is_type1(m3).has_value());
  }
}

TEST_CASE("type 1 implies all derivatives commute and survives constant similarity") {
  oracle::Gen g(35);
  for (int i = 0; i < 30; ++i) {
    MatF m = (i % 2) ? gen::upper3(g, i) : gen::upper2(g, i);
    auto w = is_type1(m);
    REQUIRE(w.has_value());
    CHECK(derivatives_pairwise_commute(m, 3));
    auto [t, ti] = g.unimodular(m.rows());
    MatF c = gen::conj(t, m, ti);
    CHECK(is_type1(c).has_value());
    CHECK(classify(c).type1.has_value() == classify(m).type1.has_value());
  }
}

TEST_CASE("idempotents that commute with their derivative are constant") {
  oracle::Gen g(36);
  for (int i = 0; i < 40; ++i) {
    MatF n = gen::rank_one_idempotent(g, g.small(2, 3));
    REQUIRE(n * n == n);
    bool r = false;
    CHECK_NOTHROW(r = idempotent_constancy_check(n));
    CHECK(r == is_constant(n));
    MatK c = gen::constant_idempotent(g, g.small(1, 4));
    CHECK(idempotent_constancy_check(oracle::lift(c)));
  }
}
