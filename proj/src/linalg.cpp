#include "kausz/linalg.hpp"

namespace kausz {

std::vector<int> rref_in_place(RationalMatrix& m) {
  std::vector<int> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(row).swap(m.row(pivot));
    const Rational inv = Rational(1) / m(row, col);
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(row, j) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational factor = m(i, col);
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

int matrix_rank(RationalMatrix m) { return static_cast<int>(rref_in_place(m).size()); }

RationalMatrix kernel_basis(const RationalMatrix& m) {
  RationalMatrix reduced = m;
  const std::vector<int> pivots = rref_in_place(reduced);
  std::vector<int> free;
  for (int c = 0, next = 0; c < m.cols(); ++c) {
    if (next < static_cast<int>(pivots.size()) && pivots[next] == c)
      ++next;
    else
      free.push_back(c);
  }
  RationalMatrix out = RationalMatrix::Zero(m.cols(), static_cast<Eigen::Index>(free.size()));
  for (std::size_t f = 0; f < free.size(); ++f) {
    out(free[f], f) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) out(pivots[i], f) = -reduced(i, free[f]);
  }
  return out;
}

bool solve_independent(const RationalMatrix& m, const RationalVector& b, RationalVector& x) {
  RationalMatrix augmented(m.rows(), m.cols() + 1);
  augmented << m, b;
  const std::vector<int> pivots = rref_in_place(augmented);
  if (static_cast<int>(pivots.size()) != m.cols()) return false;
  if (!pivots.empty() && pivots.back() == m.cols()) return false;  // b outside the span
  x.resize(m.cols());
  for (Eigen::Index i = 0; i < m.cols(); ++i) x(i) = augmented(i, m.cols());
  return true;
}

RationalMatrix to_rational(const Matrix<long long>& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

}  // namespace kausz
