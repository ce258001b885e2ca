#pragma once

#include "kausz/combinatorics.hpp"
#include "kausz/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace kausz {

/**
 * Plücker coordinates of a p x n representative.  The entry at I is the minor on the
 * columns of I taken in increasing order, so [I_p | *] has P = +1 at (p, ..., 1).
 */
template <class Scalar>
struct PlueckerVector {
  int p = 0;
  int n = 0;
  std::map<IndexTuple, Scalar> coords;
  bool rank_deficient = false;  // every coordinate vanishes

  const Scalar& operator[](const IndexTuple& index) const { return coords.at(index); }
};

template <class Derived>
PlueckerVector<typename Derived::Scalar> pluecker_vector(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  PlueckerVector<Scalar> out;
  out.p = static_cast<int>(m.rows());
  out.n = static_cast<int>(m.cols());
  if (out.p < 1 || out.p > out.n) throw std::invalid_argument("pluecker_vector: need 1 <= p <= n");
  out.rank_deficient = true;
  for (const auto& index : index_set(out.p, out.n)) {
    std::vector<int> columns;
    for (int c : index.ascending()) columns.push_back(c - 1);
    Scalar minor = determinant(select_columns(m, columns));
    if (!is_zero(minor)) out.rank_deficient = false;
    out.coords.emplace(index, std::move(minor));
  }
  return out;
}

struct PlueckerRelation {
  std::vector<int> a;  // (p-1)-subset, increasing
  std::vector<int> b;  // (p+1)-subset, increasing
  Rational value;      // sum_k (-1)^k P(a, b_k) P(b \ b_k)
};

struct RelationCheck {
  bool ok = true;
  std::size_t relations = 0;
  std::vector<PlueckerRelation> violations;
};

/** P on an ordered argument list: alternating, zero on repeats. */
Rational pluecker_at(const PlueckerVector<Rational>& v, const std::vector<int>& arguments);

RelationCheck pluecker_relations_check(const PlueckerVector<Rational>& v);

/** Kernel representative m* with m (m*)^T = 0; on the chart (I | A) it is (-A^T | I). */
RationalMatrix dual_point(const RationalMatrix& m);

/** m times the anti-diagonal permutation, i.e. column reversal. */
template <class Derived>
Matrix<typename Derived::Scalar> usd_point(const Eigen::MatrixBase<Derived>& m) {
  return m.rowwise().reverse();
}

/** Sign relating P_{usd(I)}(usd_point(m)) to P_I(m): reversing p columns. */
inline int usd_sign(int p) { return (p * (p - 1) / 2) % 2 ? -1 : 1; }

/** tau = (i_1..i_r ; j_1..j_r) in J_l. */
struct ChartIndex {
  int l = 0;
  std::vector<int> rows;
  std::vector<int> cols;
};

/** The l-th main chart tau_l. */
ChartIndex main_chart(const Params& params, int l);

/** Throws std::invalid_argument unless the chart satisfies the J_l membership rules. */
void validate_chart(const Params& params, const ChartIndex& chart);

/** Affine coordinates of the chart: the entries of A, X~, Y~ and B^1..B^r. */
std::vector<Variable> chart_coordinates(const Params& params, const ChartIndex& chart);

/** Gamma_l^tau as a p x n polynomial matrix. */
PolyMatrix mille_crepes_matrix(const Params& params, const ChartIndex& chart);

/** Gamma_l^tau evaluated at a point of the chart. */
RationalMatrix mille_crepes_point(const Params& params, const ChartIndex& chart,
                                  const std::map<Variable, Rational>& assignment);

/** I_k = (s+k, ..., s-p+k+1). */
IndexTuple pivot_index(const Params& params, int k);

struct TeEntry {
  int k = 0;
  Polynomial expected;
  Polynomial computed;  // P_{I_k} / P_{I_l}
  int sign = 0;         // computed = sign * expected, 0 when neither sign fits
  bool match = false;
};

struct TeReport {
  Params params;
  int l = 0;
  Polynomial pivot_value;  // P_{I_l} on the main chart, expected (-1)^{l(p-l)}
  std::vector<TeEntry> entries;
  bool ok = false;
};

/** Expected monomial for (R*)(P_{I_k}) on the l-th main chart. */
Polynomial te_monomial(const Params& params, int l, int k);

TeReport verify_te(const Params& params, int l);

}  // namespace kausz
