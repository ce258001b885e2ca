#pragma once

#include "kausz/linalg.hpp"

namespace kausz {

/**
 * Result of asking whether b lies in cone(columns of A).
 * member: lambda >= 0 with A lambda = b.
 * otherwise: certificate z with z^T A >= 0 and z^T b < 0.
 */
struct ConeMembership {
  bool member = false;
  RationalVector lambda;
  RationalVector certificate;
};

/** Exact phase-one simplex with Bland's rule; no tolerances anywhere. */
ConeMembership cone_membership(const RationalMatrix& generators, const RationalVector& b);

/** Checks a certificate or a combination returned by cone_membership. */
bool verify_membership(const RationalMatrix& generators, const RationalVector& b, const ConeMembership& result);

}  // namespace kausz
