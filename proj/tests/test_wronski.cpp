#include <doctest.h>

#include "dfm/elimination.hpp"
#include "dfm/errors.hpp"
#include "dfm/wronski.hpp"
#include "oracle.hpp"

using namespace dfm;
using oracle::mat;
using oracle::rf;

namespace {
std::vector<RatFunc> fs(std::initializer_list<const char*> s) {
  std::vector<RatFunc> v;
  for (auto* x : s) v.push_back(rf(x));
  return v;
}

// dim_K span(fs) from exact values at many sample points: a constant
// relation among the functions is a relation among the columns of the
// value table, and conversely once there are more points than poles+degree.
std::size_t sample_rank(const std::vector<RatFunc>& f) {
  std::vector<Rational> pts;
  for (long k = 1; pts.size() < 3 * f.size() + 12; ++k) {
    Rational t0(k * 5 - 37, 7);
    bool ok = true;
    for (const auto& x : f)
      if (oracle::eval_rf(RatFunc(x.den()), t0).is_zero()) ok = false;
    if (ok) pts.push_back(t0);
  }
  MatK v(pts.size(), f.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j) v(i, j) = oracle::eval_rf(f[j], pts[i]);
  return oracle::rank_q(v);
}
}  // namespace

TEST_CASE("Wronski matrix examples") {
  auto f = fs({"1", "t", "t^2"});
  MatF w = wronski_matrix(f, 3);
  CHECK(w == mat({{"1", "t", "t^2"}, {"0", "1", "2*t"}, {"0", "0", "2"}}));
  CHECK(oracle::cofactor_det(w) == RatFunc(2));
  CHECK(wronski_matrix(fs({"t"}), 1) == mat({{"t"}}));
}

TEST_CASE("constant rank examples") {
  auto r = constant_rank(fs({"1", "t", "t^2"}));
  CHECK(r.rank == 3);
  CHECK(r.wronskian == RatFunc(2));
  auto r2 = constant_rank(fs({"t", "t^2+t", "t^2"}));
  CHECK(r2.rank == 2);
  CHECK(r2.basis_indices == std::vector<std::size_t>{0, 1});
  CHECK(constant_rank(fs({"t", "2*t"})).rank == 1);
  CHECK(constant_rank(fs({"0", "0"})).rank == 0);
}

TEST_CASE("constant coordinate examples") {
  auto b = fs({"1", "t"});
  CHECK(constant_coordinates(rf("3*t-2"), b) == std::vector<Rational>{-2, 3});
  CHECK_THROWS_AS(constant_coordinates(rf("t^2"), b), NotInSpan);
  CHECK(constant_coordinates(rf("(t^2+t)/t"), b) == std::vector<Rational>{1, 1});
}

TEST_CASE("canonical decomposition examples") {
  auto d = canonical_decomposition(mat({{"t", "0"}, {"0", "t^2"}}));
  CHECK(d.basis == fs({"t", "t^2"}));
  CHECK(d.constants[0] == oracle::matk({{1, 0}, {0, 0}}));
  CHECK(d.constants[1] == oracle::matk({{0, 0}, {0, 1}}));

  MatK c = oracle::matk({{1, 2}, {3, 4}});
  auto dc = canonical_decomposition(oracle::lift(c));
  CHECK(dc.basis == fs({"1"}));
  CHECK(dc.constants[0] == c);

  auto da = canonical_decomposition(oracle::ma());
  CHECK(da.basis == fs({"t^2", "t^3", "t^4", "t", "1"}));
  CHECK(da.reconstruct(3) == oracle::ma());
  // t^2 sits at (0,0), (1,1) with factor -2, and (2,2)
  CHECK(da.constants[0] == oracle::matk({{1, 0, 0}, {0, -2, 0}, {0, 0, 1}}));
  CHECK(da.constants[3] == oracle::matk({{0, 0, 0}, {-2, 0, 0}, {0, 1, 0}}));
  CHECK(da.constants[4] == oracle::matk({{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}));
  CHECK_FALSE(da.constants_commute());

  auto dz = canonical_decomposition(MatF(2, 2));
  CHECK(dz.rank() == 0);
  CHECK(dz.reconstruct(2).is_zero());
}

TEST_CASE("Wronskian detects constant dependence, both directions") {
  oracle::Gen g(21);
  int indep = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t k = g.small(1, 4);
    std::vector<RatFunc> f;
    for (std::size_t j = 0; j < k; ++j) f.push_back(g.ratfunc(2));
    const std::size_t truth = sample_rank(f);
    RatFunc w = oracle::cofactor_det(wronski_matrix(f, k));
    CHECK((truth == k) == !w.is_zero());
    CHECK(constant_rank(f).rank == truth);
    if (truth == k) ++indep;

    // explicit combination appended: always dependent
    RatFunc comb;
    for (const auto& x : f) comb += RatFunc(g.q()) * x;
    f.push_back(comb);
    CHECK(oracle::cofactor_det(wronski_matrix(f, f.size())).is_zero());
    CHECK(constant_rank(f).rank == truth);
  }
  CHECK(indep > 50);
}

TEST_CASE("canonical decomposition properties") {
  oracle::Gen g(22);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = g.small(2, 3);
    MatF m = g.matf(n, n, 1);
    auto d = canonical_decomposition(m);
    CHECK(d.reconstruct(n) == m);
    CHECK(constant_rank(d.basis).rank == d.rank());
    std::vector<RatFunc> entries(m.data().begin(), m.data().end());
    CHECK(sample_rank(entries) == d.rank());
    for (const auto& e : m.data())
      for (const auto& c : constant_coordinates(e, d.basis)) CHECK(RatFunc(c).is_constant());

    auto [t, ti] = g.unimodular(n);
    MatF conj = oracle::lift(ti) * m * oracle::lift(t);
    CHECK(canonical_decomposition(conj).rank() == d.rank());
  }
}

TEST_CASE("reported Wronskian is the determinant of the certificate") {
  oracle::Gen g(23);
  for (int i = 0; i < 30; ++i) {
    std::vector<RatFunc> f;
    const std::size_t k = g.small(1, 3);
    for (std::size_t j = 0; j < k; ++j) f.push_back(g.ratfunc(2));
    auto r = constant_rank(f);
    if (r.rank == 0) continue;
    CHECK(r.wronskian == oracle::cofactor_det(r.certificate));
    CHECK(r.certificate.rows() == r.rank);
  }
}
