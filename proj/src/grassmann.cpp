#include "kausz/grassmann.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kausz {

Rational pluecker_at(const PlueckerVector<Rational>& v, const std::vector<int>& arguments) {
  std::set<int> distinct(arguments.begin(), arguments.end());
  if (distinct.size() != arguments.size()) return 0;
  const Rational& value = v[IndexTuple::from_set(arguments)];
  return permutation_sign(arguments) * value;
}

RelationCheck pluecker_relations_check(const PlueckerVector<Rational>& v) {
  const std::size_t expected = static_cast<std::size_t>(binomial(v.n, v.p));
  if (v.coords.size() != expected) throw std::invalid_argument("Plücker vector does not cover I_{p,n}");
  RelationCheck out;
  const auto as = v.p >= 1 ? index_set(v.p - 1, v.n) : std::vector<IndexTuple>{};
  const auto bs = v.p + 1 <= v.n ? index_set(v.p + 1, v.n) : std::vector<IndexTuple>{};
  for (const auto& a_index : as) {
    const std::vector<int> a = a_index.ascending();
    for (const auto& b_index : bs) {
      const std::vector<int> b = b_index.ascending();
      Rational total = 0;
      for (std::size_t k = 0; k < b.size(); ++k) {
        std::vector<int> left = a;
        left.push_back(b[k]);
        std::vector<int> right;
        for (std::size_t t = 0; t < b.size(); ++t)
          if (t != k) right.push_back(b[t]);
        const Rational term = pluecker_at(v, left) * pluecker_at(v, right);
        total += (k % 2 == 0) ? term : Rational(-term);
      }
      ++out.relations;
      if (total != 0) {
        out.ok = false;
        out.violations.push_back({a, b, total});
      }
    }
  }
  return out;
}

RationalMatrix dual_point(const RationalMatrix& m) {
  if (matrix_rank(m) != m.rows()) throw std::invalid_argument("dual_point: matrix is not of full rank p");
  return kernel_basis(m).transpose();
}

ChartIndex main_chart(const Params& params, int l) {
  if (l < 0 || l > params.r) throw std::invalid_argument("main_chart: l outside 0..r");
  ChartIndex out;
  out.l = l;
  for (int k = 1; k <= params.r - l; ++k) {
    out.rows.push_back(l + k);
    out.cols.push_back(params.s + l + k);
  }
  for (int m = 1; m <= l; ++m) {
    out.rows.push_back(l + 1 - m);
    out.cols.push_back(params.s - params.p + l + 1 - m);
  }
  return out;
}

namespace {

void check_distinct_in(const std::vector<int>& values, int lo, int hi, const char* what) {
  std::set<int> seen;
  for (int v : values) {
    if (v < lo || v > hi)
      throw std::invalid_argument(std::string("chart: ") + what + " entry " + std::to_string(v) +
                                  " outside " + std::to_string(lo) + ".." + std::to_string(hi));
    if (!seen.insert(v).second)
      throw std::invalid_argument(std::string("chart: repeated ") + what + " entry " + std::to_string(v));
  }
}

}  // namespace

void validate_chart(const Params& params, const ChartIndex& chart) {
  const int r = params.r, l = chart.l, s = params.s, p = params.p, n = params.n;
  if (l < 0 || l > r) throw std::invalid_argument("chart: l outside 0..r");
  if (static_cast<int>(chart.rows.size()) != r || static_cast<int>(chart.cols.size()) != r)
    throw std::invalid_argument("chart: tau must have r columns");
  const std::vector<int> lower_rows(chart.rows.begin(), chart.rows.begin() + (r - l));
  const std::vector<int> upper_rows(chart.rows.begin() + (r - l), chart.rows.end());
  const std::vector<int> lower_cols(chart.cols.begin(), chart.cols.begin() + (r - l));
  const std::vector<int> upper_cols(chart.cols.begin() + (r - l), chart.cols.end());
  check_distinct_in(lower_rows, l + 1, p, "row");
  check_distinct_in(upper_rows, 1, l, "row");  // l distinct values in 1..l: a permutation
  check_distinct_in(lower_cols, s + l + 1, n, "column");
  check_distinct_in(upper_cols, 1, s - p + l, "column");
}

namespace {

bool among(const std::vector<int>& values, std::size_t first, std::size_t last, int v) {
  return std::find(values.begin() + first, values.begin() + last, v) != values.begin() + last;
}

/** Xi_k^T Omega_k: rows in [row_lo, row_hi], columns in [col_lo, col_hi] (1-based), block-local. */
PolyMatrix rank_one_layer(const ChartIndex& chart, int k, std::size_t first, int row_lo, int row_hi,
                          int col_lo, int col_hi) {
  const int ik = chart.rows[k - 1], jk = chart.cols[k - 1];
  Vector<Polynomial> xi(row_hi - row_lo + 1), omega(col_hi - col_lo + 1);
  for (int t = row_lo; t <= row_hi; ++t) {
    Polynomial& v = xi(t - row_lo);
    if (t == ik)
      v = 1;
    else if (among(chart.rows, first, k - 1, t))
      v = 0;
    else
      v = Variable::xi(k, t, jk);
  }
  for (int t = col_lo; t <= col_hi; ++t) {
    Polynomial& w = omega(t - col_lo);
    if (t == jk)
      w = 1;
    else if (among(chart.cols, first, k - 1, t))
      w = 0;
    else
      w = Variable::xi(k, ik, t);
  }
  return xi * omega.transpose();
}

}  // namespace

PolyMatrix mille_crepes_matrix(const Params& params, const ChartIndex& chart) {
  validate_chart(params, chart);
  const int s = params.s, p = params.p, n = params.n, r = params.r, l = chart.l;
  const int left = s - p + l;  // width of the Z / Y~ block
  PolyMatrix g = PolyMatrix::Constant(p, n, Polynomial(0));

  // Z: a-telescope on rows 1..l, columns 1..s-p+l
  Polynomial coefficient = 1;
  for (int k = r - l + 1; k <= r; ++k) {
    coefficient *= Variable::a(chart.rows[k - 1], chart.cols[k - 1]);
    g.block(0, 0, l, left) += rank_one_layer(chart, k, r - l, 1, l, 1, left) * coefficient;
  }
  // Y~ on rows l+1..p, columns 1..s-p+l
  for (int i = l + 1; i <= p; ++i)
    for (int j = 1; j <= left; ++j) g(i - 1, j - 1) = Variable::y(i, j);
  // identity blocks
  for (int t = 1; t <= p - l; ++t) g(l + t - 1, left + t - 1) = 1;
  for (int t = 1; t <= l; ++t) g(t - 1, s + t - 1) = 1;
  // X~ on rows 1..l, columns s+l+1..n
  for (int i = 1; i <= l; ++i)
    for (int j = s + l + 1; j <= n; ++j) g(i - 1, j - 1) = Variable::x(i, j);
  // W: b-telescope on rows l+1..p, columns s+l+1..n
  coefficient = 1;
  for (int k = 1; k <= r - l; ++k) {
    coefficient *= Variable::b(chart.rows[k - 1], chart.cols[k - 1]);
    g.block(l, s + l, p - l, n - s - l) += rank_one_layer(chart, k, 0, l + 1, p, s + l + 1, n) * coefficient;
  }
  return g;
}

std::vector<Variable> chart_coordinates(const Params& params, const ChartIndex& chart) {
  validate_chart(params, chart);
  const int s = params.s, p = params.p, n = params.n, r = params.r, l = chart.l;
  std::vector<Variable> out;
  for (int k = 1; k <= r; ++k)
    out.push_back(k <= r - l ? Variable::b(chart.rows[k - 1], chart.cols[k - 1])
                             : Variable::a(chart.rows[k - 1], chart.cols[k - 1]));
  for (int i = 1; i <= l; ++i)
    for (int j = s + l + 1; j <= n; ++j) out.push_back(Variable::x(i, j));
  for (int i = l + 1; i <= p; ++i)
    for (int j = 1; j <= s - p + l; ++j) out.push_back(Variable::y(i, j));
  for (int k = 1; k <= r; ++k) {
    const bool lower = k <= r - l;
    const std::size_t first = lower ? 0 : r - l;
    const int col_lo = lower ? s + l + 1 : 1, col_hi = lower ? n : s - p + l;
    const int row_lo = lower ? l + 1 : 1, row_hi = lower ? p : l;
    const int ik = chart.rows[k - 1], jk = chart.cols[k - 1];
    for (int t = col_lo; t <= col_hi; ++t)
      if (!among(chart.cols, first, k, t)) out.push_back(Variable::xi(k, ik, t));
    for (int t = row_lo; t <= row_hi; ++t)
      if (!among(chart.rows, first, k, t)) out.push_back(Variable::xi(k, t, jk));
  }
  return out;
}

RationalMatrix mille_crepes_point(const Params& params, const ChartIndex& chart,
                                  const std::map<Variable, Rational>& assignment) {
  const PolyMatrix g = mille_crepes_matrix(params, chart);
  RationalMatrix out(g.rows(), g.cols());
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) out(i, j) = g(i, j).evaluate(assignment);
  return out;
}

IndexTuple pivot_index(const Params& params, int k) {
  std::vector<int> entries;
  for (int i = params.s + k; i >= params.s - params.p + k + 1; --i) entries.push_back(i);
  return IndexTuple(std::move(entries));
}

Polynomial te_monomial(const Params& params, int l, int k) {
  const int s = params.s, p = params.p;
  Polynomial out = 1;
  if (k < l)
    for (int t = k + 1; t <= l; ++t) out *= Polynomial::power(Variable::a(t, s - p + t), t - k);
  else if (k > l)
    for (int t = l + 1; t <= k; ++t) out *= Polynomial::power(Variable::b(t, s + t), k + 1 - t);
  return out;
}

TeReport verify_te(const Params& params, int l) {
  if (l < 0 || l > params.r) throw std::invalid_argument("verify_te: l outside 0..r");
  TeReport report;
  report.params = params;
  report.l = l;
  const PolyMatrix g = mille_crepes_matrix(params, main_chart(params, l));
  auto minor_at = [&](int k) {
    std::vector<int> columns;
    for (int c : pivot_index(params, k).ascending()) columns.push_back(c - 1);
    return determinant(select_columns(g, columns));
  };
  report.pivot_value = minor_at(l);
  const Integer pivot = report.pivot_value.constant_term();
  report.ok = report.pivot_value.is_constant() && (pivot == 1 || pivot == -1);
  for (int k = 0; k <= params.r; ++k) {
    TeEntry entry;
    entry.k = k;
    entry.expected = te_monomial(params, l, k);
    entry.computed = report.ok ? minor_at(k).divided_exactly(pivot) : minor_at(k);
    if (entry.computed == entry.expected)
      entry.sign = 1;
    else if (entry.computed == -entry.expected)
      entry.sign = -1;
    entry.match = report.ok && entry.sign != 0;
    report.ok = report.ok && entry.match;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace kausz
