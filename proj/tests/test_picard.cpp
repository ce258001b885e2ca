#include "doctest.h"

#include "kausz/picard.hpp"

using namespace kausz;
using K = SpanSymbol::Kind;
using F = DivisorName::Family;

namespace {

DivisorClass t_class(const Params& q, int h, std::vector<int> minus, std::vector<int> plus) {
  DivisorClass c = zero_class(q, Space::T);
  c[{K::H, 0}] = h;
  for (int i = 1; i <= q.r; ++i) {
    c[{K::Dminus, i}] = minus[i - 1];
    c[{K::Dplus, i}] = plus[i - 1];
  }
  return c;
}

// canonical class written out directly
DivisorClass kan(const Params& q) {
  const int s = q.s, p = q.p, n = q.n, r = q.r;
  DivisorClass k = zero_class(q, Space::T);
  k[{K::H, 0}] = -n;
  for (int i = 1; i <= r; ++i) {
    k[{K::Dminus, i}] = (p - i + 1) * (n - s - i + 1) - 1;
    k[{K::Dplus, i}] = r == p ? (p - i + 1) * (s - i + 1) - 1 : (n - p - i + 1) * (n - s - i + 1) - 1;
  }
  return k;
}

// H_j of the partial-line lemma
DivisorClass h_line(const Params& q, int j) {
  const int r = q.r;
  DivisorClass c = symbol_class(q, {K::H, 0});
  for (int i = 1; i <= r - j; ++i) c[{K::Dplus, i}] -= r - i + 1 - j;
  for (int i = 1; i <= j; ++i) c[{K::Dminus, i}] -= j + 1 - i;
  return c;
}

}  // namespace

TEST_CASE("basis sizes follow the three cases") {
  CHECK(basis(Params::make(4, 2, 7), Space::T).size() == 5);
  CHECK(basis(Params::make(3, 2, 5), Space::T).size() == 4);
  CHECK(basis(Params::make(3, 3, 6), Space::T).size() == 5);
  CHECK(basis(Params::make(2, 2, 4), Space::M).size() == 1);
  CHECK(basis(Params::make(4, 2, 7), Space::M).size() == 3);
  CHECK(basis(Params::make(3, 2, 5), Space::M).size() == 2);

  const auto b = basis(Params::make(4, 2, 7), Space::T);
  std::vector<std::string> names;
  for (const auto& s : b) names.push_back(s.str());
  CHECK(names == std::vector<std::string>{"H", "Dplus_1", "Dplus_2", "Dminus_1", "Dminus_2"});

  for (const auto& q : all_params(12, true)) {
    const int r = q.r;
    const int expected_t = q.p == q.s ? 2 * r - 1 : (q.p == q.n - q.s ? 2 * r : 2 * r + 1);
    const int expected_m = q.p == q.s ? r - 1 : (q.p == q.n - q.s ? r : r + 1);
    CHECK(basis(q, Space::T).size() == static_cast<std::size_t>(expected_t));
    CHECK(basis(q, Space::M).size() == static_cast<std::size_t>(expected_m));
  }
}

TEST_CASE("reduced coordinates of the basis are the identity") {
  for (const auto& q : all_params(10, true))
    for (Space space : {Space::T, Space::M}) {
      const auto b = basis(q, space);
      for (std::size_t j = 0; j < b.size(); ++j) {
        const RationalVector x = reduced_coordinates(symbol_class(q, b[j]));
        for (std::size_t i = 0; i < b.size(); ++i) CHECK(x(i) == (i == j ? 1 : 0));
      }
    }
}

TEST_CASE("reduction is idempotent and linear") {
  for (const auto& q : all_params(10, true))
    for (Space space : {Space::T, Space::M}) {
      const auto symbols = spanning_symbols(q, space);
      DivisorClass a = zero_class(q, space), b = zero_class(q, space);
      for (std::size_t i = 0; i < symbols.size(); ++i) {
        a[symbols[i]] = Rational(int(i) - 2, 3);
        b[symbols[i]] = int(i * i) % 5;
      }
      CHECK(reduce(reduce(a)) == reduce(a));
      CHECK(reduce(a + Rational(2) * b) == reduce(a) + Rational(2) * reduce(b));
      CHECK(from_reduced_coordinates(q, space, reduced_coordinates(a)) == reduce(a));
    }
}

TEST_CASE("eliminated symbols equal their relation") {
  const Params q = Params::make(3, 2, 5);  // p = n - s
  const DivisorClass rel = eliminated_expansion(q, {K::Dminus, 2});
  // D_2 = H - 2 D_1
  CHECK(rel == t_class(q, 1, {-2, 0}, {0, 0}));
  CHECK(equivalent(symbol_class(q, {K::Dminus, 2}), rel));
}

TEST_CASE("canonical class") {
  const Params q = Params::make(3, 2, 5);
  CHECK(named_divisor(q, {F::K}) == t_class(q, -5, {3, 0}, {5, 1}));
  CHECK(named_divisor(q, {F::antiK}) == -t_class(q, -5, {3, 0}, {5, 1}));
  for (const auto& params : all_params(12, true)) CHECK(equivalent(named_divisor(params, {F::K}), kan(params)));
}

TEST_CASE("M canonical class and adjunction") {
  const Params q = Params::make(4, 2, 7);
  DivisorClass expected = zero_class(q, Space::M);
  expected[{K::Hcheck, 0}] = -7;
  expected[{K::Dcheck, 1}] = 6;
  expected[{K::Dcheck, 2}] = 1;
  CHECK(m_named_divisor(q, {F::KM}).cls == expected);
  for (const auto& params : all_params(12, true)) {
    const DivisorClass adjunction =
        restrict_to_M(named_divisor(params, {F::K}) + symbol_class(params, {K::Dminus, 1}));
    CHECK(equivalent(adjunction, m_named_divisor(params, {F::KM}).cls));
  }
}

TEST_CASE("exceptional divisor") {
  CHECK(named_divisor(Params::make(4, 2, 7), {F::E}) == t_class(Params::make(4, 2, 7), 0, {1, 1}, {1, 1}));
  CHECK(named_divisor(Params::make(3, 2, 5), {F::E}) == t_class(Params::make(3, 2, 5), 0, {1, 0}, {1, 1}));
  CHECK(named_divisor(Params::make(3, 3, 6), {F::E}) ==
        t_class(Params::make(3, 3, 6), 0, {1, 1, 0}, {1, 1, 0}));
}

TEST_CASE("B divisors match the partial-line classes") {
  for (const auto& q : all_params(12, true))
    for (int j = 0; j <= q.r; ++j) {
      CHECK(equivalent(named_divisor(q, {F::Hline, j}), h_line(q, j)));
      const bool b0_override = j == 0 && q.p == q.s;
      const bool br_override = j == q.r && q.p == q.n - q.s;
      if (!b0_override && !br_override) CHECK(named_divisor(q, {F::B, j}) == h_line(q, j));
    }
  const Params q = Params::make(4, 2, 7);
  CHECK(named_divisor(q, {F::B, 0}) == t_class(q, 1, {0, 0}, {-2, -1}));
  const Params sym = Params::make(3, 3, 6);
  CHECK(named_divisor(sym, {F::B, 0}) == symbol_class(sym, {K::Dplus, 3}));
  const Params deg = Params::make(3, 2, 5);
  CHECK(named_divisor(deg, {F::B, 2}) == symbol_class(deg, {K::Dminus, 2}));
}

TEST_CASE("M divisors") {
  const Params q = Params::make(4, 2, 7);
  CHECK(m_named_divisor(q, {F::Bcheck, 0}).cls == symbol_class(q, {K::Hcheck, 0}));
  DivisorClass b2 = symbol_class(q, {K::Hcheck, 0});
  b2[{K::Dcheck, 1}] = -2;
  b2[{K::Dcheck, 2}] = -1;
  CHECK(m_named_divisor(q, {F::Bcheck, 2}).cls == b2);
  CHECK(m_named_divisor(Params::make(3, 3, 6), {F::Bcheck, 0}).empty);
  CHECK_FALSE(m_named_divisor(q, {F::Bcheck, 0}).empty);
  CHECK_THROWS(named_divisor(q, {F::B, 3}));
  CHECK_THROWS(m_named_divisor(q, {F::Dcheck, 0}));
}

TEST_CASE("divisor names round-trip") {
  for (const char* text : {"H", "B_2", "Dplus_1", "Dminus_3", "Hline_1", "E", "K", "antiK", "Hcheck", "Dcheck_2",
                           "Bcheck_0", "KM", "antiKM"})
    CHECK(DivisorName::parse(text).str() == text);
  CHECK_THROWS_AS(DivisorName::parse("Q_1"), std::invalid_argument);
}

TEST_CASE("pullback automorphisms") {
  const Params q = Params::make(2, 1, 4);
  const RationalMatrix usd = pullback_auto(q, Automorphism::USDstar);
  CHECK(apply_map(usd, symbol_class(q, {K::Dplus, 1})) == symbol_class(q, {K::Dminus, 1}));
  CHECK(apply_map(usd, symbol_class(q, {K::H, 0})) == symbol_class(q, {K::H, 0}));
  CHECK(equivalent(apply_map(usd, named_divisor(q, {F::B, 0})), named_divisor(q, {F::B, 1})));
  CHECK_THROWS_AS(pullback_auto(q, Automorphism::DUALstar), std::domain_error);

  const Params m = Params::make(4, 4, 8);
  CHECK_NOTHROW(pullback_auto(m, Automorphism::Dualstar));
  const Params d = Params::make(4, 2, 8);
  const RationalMatrix dual = pullback_auto(d, Automorphism::Usdstar);
  CHECK(apply_map(dual, symbol_class(d, {K::Dcheck, 2})) == symbol_class(d, {K::Dcheck, 2}));
  DivisorClass minus_sum = -(symbol_class(d, {K::Dcheck, 1}) + symbol_class(d, {K::Dcheck, 2}));
  CHECK(apply_map(dual, symbol_class(d, {K::Dcheck, 1})) == minus_sum);

  const Params s = Params::make(3, 3, 6);
  const RationalMatrix frac = pullback_auto(s, Automorphism::Usdstar);
  DivisorClass expected = zero_class(s, Space::M);
  expected[{K::Dcheck, 2}] = Rational(-1, 3);
  expected[{K::Dcheck, 3}] = Rational(-2, 3);
  CHECK(apply_map(frac, symbol_class(s, {K::Dcheck, 1})) == expected);
}

TEST_CASE("pullbacks are involutions fixing the canonical class") {
  for (const auto& q : all_params(12, true)) {
    std::vector<Automorphism> autos;
    if (q.n == 2 * q.s) autos.insert(autos.end(), {Automorphism::USDstar, Automorphism::Usdstar});
    if (q.n == 2 * q.p) autos.insert(autos.end(), {Automorphism::DUALstar, Automorphism::Dualstar});
    for (auto which : autos) {
      const Space space = automorphism_space(which);
      const RationalMatrix a = reduced_action(q, space, pullback_auto(q, which));
      CHECK(RationalMatrix(a * a) == RationalMatrix::Identity(a.rows(), a.cols()));
      const DivisorClass k = divisor(q, {space == Space::T ? F::K : F::KM});
      CHECK(equivalent(apply_map(pullback_auto(q, which), k), k));
    }
  }
}

TEST_CASE("linear series dimension") {
  const Params q = Params::make(3, 2, 5);
  CHECK(linear_series_dim(q, 1) == 6);
  CHECK(linear_series_dim(q, 0) == 3);
  CHECK_THROWS(linear_series_dim(q, 3));
  for (const auto& params : all_params(10, true))
    for (int j = 0; j <= params.r; ++j)
      CHECK(linear_series_dim(params, j) == restricted_index_set(params, j).size());
}

TEST_CASE("picard needs normalized params") {
  CHECK_THROWS_AS(basis(Params::make(2, 3, 5), Space::T), std::domain_error);
}
