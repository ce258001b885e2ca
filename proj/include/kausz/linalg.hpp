#pragma once

#include "kausz/polynomial.hpp"
#include "kausz/rational.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kausz {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;
using PolyMatrix = Matrix<Polynomial>;

inline constexpr int default_determinant_bound = 8;

/**
 * Exact determinant by Laplace expansion along the rows, memoized over the set
 * of columns already used.  Works for any commutative ring scalar.
 */
template <class Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m,
                                     int max_side = default_determinant_bound) {
  using Scalar = typename Derived::Scalar;
  const int size = static_cast<int>(m.rows());
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (size > max_side)
    throw std::invalid_argument("determinant: side " + std::to_string(size) +
                                " exceeds the configured bound " + std::to_string(max_side));
  if (size == 0) return Scalar(1);

  // minor[mask] = determinant of the last popcount(mask) rows restricted to columns in mask
  const std::uint32_t full = (1u << size) - 1;
  std::vector<Scalar> minor(std::size_t(1) << size, Scalar(0));
  minor[0] = Scalar(1);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const int row = size - std::popcount(mask);
    Scalar acc(0);
    int position = 0;
    for (int c = 0; c < size; ++c) {
      if (!(mask & (1u << c))) continue;
      const Scalar& entry = m(row, c);
      const std::uint32_t rest = mask & ~(1u << c);
      if (!is_zero(entry) && !is_zero(minor[rest])) {
        if (position % 2 == 0)
          acc += entry * minor[rest];
        else
          acc -= entry * minor[rest];
      }
      ++position;
    }
    minor[mask] = std::move(acc);
  }
  return minor[full];
}

/** Columns of `m` picked in the given order. */
template <class Derived>
Matrix<typename Derived::Scalar> select_columns(const Eigen::MatrixBase<Derived>& m,
                                                const std::vector<int>& columns) {
  Matrix<typename Derived::Scalar> out(m.rows(), static_cast<Eigen::Index>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) out.col(j) = m.col(columns[j]);
  return out;
}

/** Reduced row echelon form over Q; returns the pivot columns. */
std::vector<int> rref_in_place(RationalMatrix& m);

int matrix_rank(RationalMatrix m);

/** Basis of {x : m x = 0}, one column per free variable (x_free = 1, x_pivot = -R(i, free)). */
RationalMatrix kernel_basis(const RationalMatrix& m);

/** Solves m x = b when m has independent columns and b lies in their span. */
bool solve_independent(const RationalMatrix& m, const RationalVector& b, RationalVector& x);

RationalMatrix to_rational(const Matrix<long long>& m);

}  // namespace kausz
