#include "kausz/cone.hpp"

#include <stdexcept>

namespace kausz {

ConeMembership cone_membership(const RationalMatrix& generators, const RationalVector& b) {
  const Eigen::Index d = generators.rows(), m = generators.cols();
  if (b.size() != d) throw std::invalid_argument("cone_membership: dimension mismatch");

  // tableau [A' | I | b'] with rows flipped so that b' >= 0, plus the phase-one cost row
  std::vector<int> flip(d, 1);
  RationalMatrix t = RationalMatrix::Zero(d + 1, m + d + 1);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (b(i) < 0) flip[i] = -1;
    for (Eigen::Index j = 0; j < m; ++j) t(i, j) = flip[i] * generators(i, j);
    t(i, m + i) = 1;
    t(i, m + d) = flip[i] * b(i);
  }
  const Eigen::Index cost = d, rhs = m + d;
  for (Eigen::Index j = 0; j <= rhs; ++j) {
    if (j >= m && j < m + d) continue;
    for (Eigen::Index i = 0; i < d; ++i) t(cost, j) -= t(i, j);
  }
  std::vector<Eigen::Index> basic(d);
  for (Eigen::Index i = 0; i < d; ++i) basic[i] = m + i;

  while (true) {
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < m + d; ++j)
      if (t(cost, j) < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    Eigen::Index leave = -1;
    Rational best;
    for (Eigen::Index i = 0; i < d; ++i) {
      if (t(i, enter) <= 0) continue;
      const Rational ratio = t(i, rhs) / t(i, enter);
      if (leave < 0 || ratio < best || (ratio == best && basic[i] < basic[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) throw std::logic_error("phase-one simplex is bounded below by zero");
    const Rational pivot = t(leave, enter);
    for (Eigen::Index j = 0; j <= rhs; ++j) t(leave, j) /= pivot;
    for (Eigen::Index i = 0; i <= d; ++i) {
      if (i == leave || t(i, enter) == 0) continue;
      const Rational factor = t(i, enter);
      for (Eigen::Index j = 0; j <= rhs; ++j) t(i, j) -= factor * t(leave, j);
    }
    basic[leave] = enter;
  }

  ConeMembership out;
  out.member = t(cost, rhs) == 0;
  if (out.member) {
    out.lambda = RationalVector::Zero(m);
    for (Eigen::Index i = 0; i < d; ++i)
      if (basic[i] < m) out.lambda(basic[i]) = t(i, rhs);
  } else {
    // y_i = 1 - (reduced cost of artificial i); z = -D y
    out.certificate.resize(d);
    for (Eigen::Index i = 0; i < d; ++i) out.certificate(i) = -flip[i] * (Rational(1) - t(cost, m + i));
  }
  return out;
}

bool verify_membership(const RationalMatrix& generators, const RationalVector& b, const ConeMembership& result) {
  if (result.member) {
    for (Eigen::Index j = 0; j < result.lambda.size(); ++j)
      if (result.lambda(j) < 0) return false;
    return RationalVector(generators * result.lambda) == b;
  }
  const RationalVector zt_a = generators.transpose() * result.certificate;
  for (Eigen::Index j = 0; j < zt_a.size(); ++j)
    if (zt_a(j) < 0) return false;
  return result.certificate.dot(b) < 0;
}

}  // namespace kausz
