#pragma once

#include "kausz/combinatorics.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kausz {

struct SweepConfig {
  int n_max = 12;
  int symbolic_n_max = 10;
  bool normalized_only = true;
  bool strict = false;  // known discrepancies become fatal
  std::uint64_t seed = 20240601;
  int random_matrices = 100;
};

/** Throws std::invalid_argument unless 2 <= n_max <= 16 and the symbolic bound is sane. */
void validate(const SweepConfig& config);

struct KnownDiscrepancy {
  std::string id;
  std::string check;
  std::string lemma;
  std::string curves;
  std::string printed;
  std::string derived;
  std::string description;
};

/** The shipped allowlist. */
const std::vector<KnownDiscrepancy>& known_discrepancies();

struct Finding {
  std::string subject;  // "(3,2,5) zeta(l=0,j=2)"
  std::string detail;   // "derived 3/1, printed 2/1"
  std::string known_id; // empty unless allowlisted
};

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::vector<Finding> findings;

  std::size_t failures(bool strict) const;
  std::size_t known() const;
  bool passed(bool strict) const { return failures(strict) == 0; }
};

struct VerifyReport {
  SweepConfig config;
  std::vector<CheckResult> checks;

  bool passed() const;
};

CheckResult check_relation_consistency(const SweepConfig& config);
CheckResult check_anticanonical(const SweepConfig& config);
CheckResult check_positivity(const SweepConfig& config);
CheckResult check_extremal(const SweepConfig& config);
CheckResult check_pluecker(const SweepConfig& config);
CheckResult check_dual_usd(const SweepConfig& config);
CheckResult check_te(const SweepConfig& config);
CheckResult check_involutions(const SweepConfig& config);
CheckResult check_classifier(const SweepConfig& config);
CheckResult check_counting(const SweepConfig& config);

/** Every check above, in that order. */
VerifyReport run_verification(const SweepConfig& config);

}  // namespace kausz
