#include "doctest.h"

#include "kausz/cone.hpp"

#include <random>

using namespace kausz;

namespace {

// Caratheodory: b is in the cone iff some linearly independent subset of columns
// expresses b with nonnegative coefficients.
bool caratheodory(const RationalMatrix& a, const RationalVector& b) {
  const int cols = static_cast<int>(a.cols());
  for (unsigned mask = 0; mask < (1u << cols); ++mask) {
    std::vector<int> chosen;
    for (int j = 0; j < cols; ++j)
      if (mask >> j & 1u) chosen.push_back(j);
    if (static_cast<int>(chosen.size()) > a.rows()) continue;
    RationalMatrix sub(a.rows(), chosen.size());
    for (std::size_t k = 0; k < chosen.size(); ++k) sub.col(k) = a.col(chosen[k]);
    if (matrix_rank(sub) != static_cast<int>(chosen.size())) continue;
    RationalVector x;
    if (chosen.empty()) {
      if (b.isZero()) return true;
      continue;
    }
    if (!solve_independent(sub, b, x)) continue;
    bool nonneg = true;
    for (Eigen::Index i = 0; i < x.size(); ++i) nonneg = nonneg && x(i) >= 0;
    if (nonneg) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("simple cones") {
  RationalMatrix a(2, 2);
  a << 1, 0, 0, 1;
  RationalVector in(2), out(2);
  in << 2, 3;
  out << -1, 1;
  const auto yes = cone_membership(a, in);
  CHECK(yes.member);
  CHECK(verify_membership(a, in, yes));
  const auto no = cone_membership(a, out);
  CHECK_FALSE(no.member);
  CHECK(verify_membership(a, out, no));
  CHECK(cone_membership(a, RationalVector::Zero(2)).member);
  CHECK(cone_membership(RationalMatrix(2, 0), RationalVector::Zero(2)).member);
  CHECK_FALSE(cone_membership(RationalMatrix(2, 0), in).member);
}

TEST_CASE("membership agrees with Caratheodory enumeration") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> e(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = 1 + trial % 4, cols = 1 + (trial / 4) % 6;
    RationalMatrix a(rows, cols);
    RationalVector b(rows);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) a(i, j) = Rational(e(rng), 1 + rng() % 2);
      b(i) = e(rng);
    }
    const auto result = cone_membership(a, b);
    CHECK(verify_membership(a, b, result));
    CHECK(result.member == caratheodory(a, b));
  }
}
