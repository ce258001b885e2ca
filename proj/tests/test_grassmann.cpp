#include "doctest.h"

#include "kausz/grassmann.hpp"

#include <random>

using namespace kausz;

namespace {

RationalMatrix parse(std::initializer_list<std::initializer_list<int>> rows) {
  RationalMatrix m(rows.size(), rows.begin()->size());
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (int x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

RationalMatrix random_full_rank(std::mt19937& rng, int p, int n) {
  std::uniform_int_distribution<int> e(-3, 3);
  for (;;) {
    RationalMatrix m(p, n);
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = e(rng);
    if (matrix_rank(m) == p) return m;
  }
}

IndexTuple idx(std::vector<int> e) { return IndexTuple::from_set(std::move(e)); }

}  // namespace

TEST_CASE("Plücker vector of the G(2,4) example") {
  const auto v = pluecker_vector(parse({{1, 0, 2, 3}, {0, 1, 4, 5}}));
  CHECK(v[idx({1, 2})] == 1);
  CHECK(v[idx({1, 3})] == 4);
  CHECK(v[idx({1, 4})] == 5);
  CHECK(v[idx({2, 3})] == -2);
  CHECK(v[idx({2, 4})] == -3);
  CHECK(v[idx({3, 4})] == -2);
  // P12 P34 - P13 P24 + P14 P23 = 0
  CHECK(v[idx({1, 2})] * v[idx({3, 4})] - v[idx({1, 3})] * v[idx({2, 4})] + v[idx({1, 4})] * v[idx({2, 3})] == 0);
  const RelationCheck ok = pluecker_relations_check(v);
  CHECK(ok.ok);
  CHECK(ok.relations > 0);

  auto perturbed = v;
  perturbed.coords[idx({3, 4})] += 1;
  const RelationCheck bad = pluecker_relations_check(perturbed);
  CHECK_FALSE(bad.ok);
  REQUIRE_FALSE(bad.violations.empty());
  CHECK(bad.violations.front().value != 0);
}

TEST_CASE("pluecker_at is alternating") {
  const auto v = pluecker_vector(parse({{1, 0, 2, 3}, {0, 1, 4, 5}}));
  CHECK(pluecker_at(v, {1, 3}) == 4);
  CHECK(pluecker_at(v, {3, 1}) == -4);
  CHECK(pluecker_at(v, {2, 2}) == 0);
}

TEST_CASE("random full-rank matrices satisfy the relations and scale projectively") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 5, p = 1 + trial % std::min(3, n - 1);
    const RationalMatrix m = random_full_rank(rng, p, n);
    const auto v = pluecker_vector(m);
    CHECK(pluecker_relations_check(v).ok);
    const RationalMatrix g = random_full_rank(rng, p, p);
    const auto w = pluecker_vector(RationalMatrix(g * m));
    const Rational det = determinant(g);
    for (const auto& [index, value] : v.coords) CHECK(w[index] == det * value);
  }
}

TEST_CASE("rank-deficient input") {
  const auto v = pluecker_vector(parse({{1, 2, 3}, {2, 4, 6}}));
  CHECK(v.rank_deficient);
  CHECK_THROWS_AS(dual_point(parse({{1, 2, 3}, {2, 4, 6}})), std::invalid_argument);
}

TEST_CASE("dual point") {
  const RationalMatrix d = dual_point(parse({{1, 0, 2, 3}, {0, 1, 4, 5}}));
  CHECK(d == parse({{-2, -4, 1, 0}, {-3, -5, 0, 1}}));

  std::mt19937 rng(99);
  for (int n = 2; n <= 6; ++n)
    for (int p = 1; p < n; ++p) {
      const Params q = Params::make(1, p, n);
      const RationalMatrix m = random_full_rank(rng, p, n);
      const RationalMatrix star = dual_point(m);
      CHECK(RationalMatrix(m * star.transpose()).isZero());
      CHECK(matrix_rank(star) == n - p);
      const auto v = pluecker_vector(m), w = pluecker_vector(star);
      std::optional<Rational> lambda;
      for (const auto& [index, value] : v.coords) {
        const auto [complement, sign] = dual_index(index, q);
        if (value == 0) {
          CHECK(w[complement] == 0);
          continue;
        }
        const Rational ratio = w[complement] / (sign * value);
        if (!lambda) lambda = ratio;
        CHECK(ratio == *lambda);
      }
    }
}

TEST_CASE("usd point") {
  CHECK(usd_point(parse({{1, 0}})) == parse({{0, 1}}));
  std::mt19937 rng(5);
  const RationalMatrix m = random_full_rank(rng, 2, 4);
  CHECK(usd_point(usd_point(m)) == m);
  const Params q = Params::make(2, 2, 4);
  const auto v = pluecker_vector(m), u = pluecker_vector(usd_point(m));
  for (const auto& [index, value] : v.coords) CHECK(u[usd_index(index, q)] == usd_sign(2) * value);
  CHECK(usd_sign(1) == 1);
  CHECK(usd_sign(2) == -1);
  CHECK(usd_sign(3) == -1);
  CHECK(usd_sign(4) == 1);
}

TEST_CASE("main chart matrix of (3,2,5)") {
  const Params q = Params::make(3, 2, 5);
  const ChartIndex tau0 = main_chart(q, 0);
  CHECK(tau0.rows == std::vector<int>{1, 2});
  CHECK(tau0.cols == std::vector<int>{4, 5});
  const PolyMatrix g = mille_crepes_matrix(q, tau0);
  REQUIRE(g.rows() == 2);
  REQUIRE(g.cols() == 5);
  const Polynomial b14 = Variable::b(1, 4), b25 = Variable::b(2, 5);
  CHECK(g(0, 3) == b14);
  // the W block is b14 Xi_1^T Omega_1 + b14 b25 Xi_2^T Omega_2; its pivot entry is b14 b25 plus the xi cross term
  const Polynomial xi115 = Variable::xi(1, 1, 5), xi124 = Variable::xi(1, 2, 4);
  CHECK(g(1, 4) == b14 * b25 + b14 * xi115 * xi124);
  CHECK(g(0, 4) == b14 * xi115);
  CHECK(g(1, 3) == b14 * xi124);
  CHECK(g(0, 1) == 1);
  CHECK(g(1, 2) == 1);
  CHECK(chart_coordinates(q, tau0).size() == static_cast<std::size_t>(q.p * (q.n - q.p)));
}

TEST_CASE("l = r chart has no b telescope") {
  const Params q = Params::make(3, 2, 5);
  const PolyMatrix g = mille_crepes_matrix(q, main_chart(q, q.r));
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j)
      for (const auto& v : g(i, j).variables()) CHECK(v.tag != Variable::Tag::b);
}

TEST_CASE("chart validation") {
  const Params q = Params::make(3, 2, 5);
  ChartIndex bad = main_chart(q, 0);
  bad.cols = {1, 1};
  CHECK_THROWS_AS(validate_chart(q, bad), std::invalid_argument);
  for (int l = 0; l <= q.r; ++l) CHECK_NOTHROW(validate_chart(q, main_chart(q, l)));
}

TEST_CASE("pivot-minor monomials on the main charts") {
  const Params q = Params::make(3, 2, 5);
  CHECK(pivot_index(q, 0) == IndexTuple({3, 2}));
  CHECK(pivot_index(q, 2) == IndexTuple({5, 4}));

  const TeReport r0 = verify_te(q, 0);
  CHECK(r0.ok);
  CHECK(r0.entries[0].computed == Polynomial(1));
  CHECK((r0.entries[1].computed == Polynomial(Variable::b(1, 4)) ||
         r0.entries[1].computed == -Polynomial(Variable::b(1, 4))));

  const Polynomial a12 = Variable::a(1, 2), a23 = Variable::a(2, 3);
  CHECK(te_monomial(q, 2, 0) == a12 * a23 * a23);
  CHECK(verify_te(q, 2).ok);

  for (const auto& params : all_params(8, true))
    for (int l = 0; l <= params.r; ++l) CHECK_MESSAGE(verify_te(params, l).ok, params.str() << " l=" << l);
}

TEST_CASE("evaluated chart point lies on the Grassmannian") {
  const Params q = Params::make(4, 2, 7);
  std::mt19937 rng(8);
  for (int l = 0; l <= q.r; ++l) {
    const ChartIndex chart = main_chart(q, l);
    std::map<Variable, Rational> at;
    for (const auto& v : chart_coordinates(q, chart)) at[v] = Rational(int(rng() % 7) - 3);
    const RationalMatrix m = mille_crepes_point(q, chart, at);
    const auto v = pluecker_vector(m);
    CHECK(pluecker_relations_check(v).ok);
    const PolyMatrix g = mille_crepes_matrix(q, chart);
    for (Eigen::Index i = 0; i < g.rows(); ++i)
      for (Eigen::Index j = 0; j < g.cols(); ++j) CHECK(g(i, j).evaluate(at) == m(i, j));
  }
}
