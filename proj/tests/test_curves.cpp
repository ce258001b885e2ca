#include "doctest.h"

#include "kausz/curves.hpp"

#include <algorithm>

using namespace kausz;
using Fam = CurveId::Family;
using F = DivisorName::Family;

namespace {

const CurveRecord& find(const std::vector<CurveRecord>& cat, const CurveId& id) {
  auto it = std::find_if(cat.begin(), cat.end(), [&](const CurveRecord& c) { return c.id == id; });
  REQUIRE(it != cat.end());
  return *it;
}

// Range counts straight from the curve definitions.
std::size_t expected_count(const Params& q) {
  const int s = q.s, p = q.p, n = q.n, r = q.r;
  std::size_t count = r;  // gamma_0..gamma_{r-1}
  for (int l = 0; l <= r; ++l) {
    for (int j = 2; j <= r; ++j)
      if (l == 0 || l == r || j <= r - l || j >= r - l + 2) ++count;
    for (int k = 1; k <= r - l; ++k) count += (n - (s + l + k)) + (p - (l + k));
    for (int k = std::max(1, r - l + 1); k <= r; ++k) count += (s - p + r - k) + (r - k);
    if (l < r || n - s < p) count += (p - l) * (s - p + l);
    if (l >= 1 && (l < r || p < n - s)) count += (n - s - l) * l;
  }
  return count;
}

}  // namespace

TEST_CASE("catalog examples for (3,2,5)") {
  const Params q = Params::make(3, 2, 5);
  const auto cat = catalog(q);
  CHECK(find(cat, {Fam::gamma, 0}).ivec == std::vector<int>{1, 1, -1, 0, 1});
  CHECK(find(cat, {Fam::zeta, 0, 2}).ivec == std::vector<int>{0, -1, 2, 0, 0});
  CHECK(find(cat, {Fam::delta, 0, 0, 0, 0, 0, 2, 1}).ivec == std::vector<int>{1, 0, 1, 0, 0});
  CHECK(cat.size() == expected_count(q));
  CHECK(std::is_sorted(cat.begin(), cat.end(), [](const auto& a, const auto& b) { return a.id < b.id; }));
}

TEST_CASE("catalog sizes match the definitions") {
  for (const auto& q : all_params(12, true)) CHECK_MESSAGE(catalog(q).size() == expected_count(q), q.str());
}

TEST_CASE("pairings") {
  const Params q = Params::make(4, 2, 7);
  const auto cat = catalog(q);
  const DivisorClass h = named_divisor(q, {F::H});
  for (const auto& c : cat)
    if (c.id.family == Fam::gamma) CHECK(intersect(h, c) == 1);
  const DivisorClass b0 = named_divisor(q, {F::B, 0});
  const auto& last = find(cat, {Fam::gamma, q.r - 1});
  // B_0 = H - 2 D_1^+ - D_2^+ and gamma_{r-1} has D^+ = (1, -1)
  CHECK(intersect(b0, last) == 1 - 2 * 1 - 1 * (-1));
  for (const auto& c : cat) CHECK(intersect(zero_class(q, Space::T), c) == 0);
  CHECK_THROWS(intersect(zero_class(q, Space::M), cat.front()));
}

TEST_CASE("anticanonical degrees") {
  const auto small = anticanonical_degrees(Params::make(2, 1, 3), Space::T);
  REQUIRE(!small.empty());
  CHECK(small.front().id == CurveId{Fam::gamma, 0});
  CHECK(small.front().derived == 2);
  CHECK(small.front().match);

  const Params q = Params::make(3, 2, 5);
  const auto rows = anticanonical_degrees(q, Space::T);
  for (const auto& row : rows) {
    if (row.id == CurveId{Fam::zetaUV, 0, 0, 1, 1, 5}) {
      CHECK(row.derived == 3);
      CHECK(row.match);
    }
    if (row.id == CurveId{Fam::zeta, 0, 2}) {
      CHECK(row.derived == 3);
      CHECK(*row.reference == 2);
      CHECK_FALSE(row.match);
    }
  }
  for (const auto& row : anticanonical_degrees(q, Space::M)) CHECK(row.match);
}

TEST_CASE("relation consistency holds everywhere") {
  for (const auto& q : all_params(12, true)) CHECK(relation_consistency(q).empty());
}

TEST_CASE("positivity examples") {
  const auto a = positivity_verdict(Params::make(4, 2, 7));
  CHECK(a.t_verdict == "ample");
  CHECK(a.zero.empty());
  const auto b = positivity_verdict(Params::make(5, 3, 9));
  CHECK(b.t_verdict == "nef-not-ample");
  CHECK(b.zero == std::vector<CurveId>{{Fam::gamma, 1}});
  const auto c = positivity_verdict(Params::make(3, 2, 5));
  CHECK(c.m_verdict == "ample");
  CHECK(*c.m_min_degree >= 1);
}

TEST_CASE("B_j are nef where the base-point lemma says they are globally generated") {
  for (const auto& q : all_params(12, true)) {
    const auto cat = catalog(q);
    const int r = q.r;
    int lo = 0, hi = r;
    if (q.p == q.n - q.s && q.p < q.s) hi = q.p - 1;
    if (q.p == q.n - q.s && q.p == q.s) lo = 1, hi = q.p - 1;
    if (q.p == q.s && q.p != q.n - q.s) continue;  // not covered by the lemma
    for (int j = lo; j <= hi; ++j) CHECK_MESSAGE(nef_on_catalog(named_divisor(q, {F::B, j}), cat), q.str() << " j=" << j);
    for (int j = 0; j <= r; ++j) CHECK(nef_on_catalog(named_divisor(q, {F::Hline, j}), cat));
  }
}

TEST_CASE("extremal ray examples") {
  const auto t = extremal_report(Params::make(4, 2, 7), Space::T);
  CHECK(t.match);
  CHECK(t.certificates_ok);
  CHECK(t.rays.size() == 6);

  const auto deg = extremal_report(Params::make(3, 2, 5), Space::T);
  CHECK(deg.match);
  CHECK(deg.rays.size() == 5);
  CHECK(std::find(deg.duplicates.begin(), deg.duplicates.end(), "Dminus_2=B_2") != deg.duplicates.end());

  const auto m = extremal_report(Params::make(4, 2, 7), Space::M);
  CHECK(m.match);
  CHECK(same_ray_sets(Params::make(4, 2, 7), Space::M, m.rays, {"Dcheck_2", "Bcheck_0", "Bcheck_2"}));

  const auto rank_one = extremal_report(Params::make(2, 1, 3), Space::T);
  CHECK_FALSE(rank_one.match);
  CHECK(rank_one.rays == std::vector<std::string>{"B_0", "Dplus_1"});
}

TEST_CASE("same_ray") {
  RationalVector a(2), b(2), c(2);
  a << 1, 2;
  b << 3, 6;
  c << -1, -2;
  CHECK(same_ray(a, b));
  CHECK_FALSE(same_ray(a, c));
}

TEST_CASE("Delta citation note") {
  const auto cat = catalog(Params::make(4, 2, 7));
  bool noted = false;
  for (const auto& c : cat)
    if (c.id.family == Fam::Delta && c.id.l < 2) noted = noted || !c.note.empty();
  CHECK(noted);
}
