#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kausz {

/** The triple (s, p, n) together with the derived rank r = min{s, n-s, p, n-p}. */
struct Params {
  int s = 0;
  int p = 0;
  int n = 0;
  int r = 0;
  bool normalized = false;  // 2p <= n <= 2s

  /** Throws std::invalid_argument unless 0 < p < n and 0 < s < n. */
  static Params make(int s, int p, int n);

  std::string str() const;
  friend bool operator==(const Params&, const Params&) = default;
  friend auto operator<=>(const Params&, const Params&) = default;
};

int rank(int s, int p, int n);
inline int rank(const Params& params) { return params.r; }

/** Every valid triple with 2 <= n <= n_max, optionally only the normalized ones. */
std::vector<Params> all_params(int n_max, bool normalized_only);

/**
 * Plücker index with strictly decreasing entries
 * i_1 > i_2 > ... > i_p.  Tuples compare lexicographically on that sequence.
 */
class IndexTuple {
 public:
  IndexTuple() = default;
  explicit IndexTuple(std::vector<int> entries);

  /** Builds a tuple from any set of distinct entries. */
  static IndexTuple from_set(std::vector<int> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }
  std::vector<int> ascending() const { return {entries_.rbegin(), entries_.rend()}; }
  int k_type(int s) const;
  bool contains(int i) const;

  std::string str() const;

  friend bool operator==(const IndexTuple&, const IndexTuple&) = default;
  friend auto operator<=>(const IndexTuple&, const IndexTuple&) = default;

 private:
  std::vector<int> entries_;
};

/** Sign (+1/-1) of the permutation sorting `sequence` into increasing order. */
int permutation_sign(const std::vector<int>& sequence);

/** All p-subsets of {1..n}, i.e. the index set I_{p,n}, sorted canonically. */
std::vector<IndexTuple> index_set(int p, int n);

/** I^k_{s,p,n}: exactly k entries in {s+1..n}, p-k entries in {1..s}.  0 <= k <= p. */
std::vector<IndexTuple> restricted_index_set(const Params& params, int k);

/** Complement I* (decreasing) and the sign of (i_1..i_p, i*_1..i*_{n-p}) -> (1..n). */
std::pair<IndexTuple, int> dual_index(const IndexTuple& index, const Params& params);

/** (n+1-i_p, ..., n+1-i_1). */
IndexTuple usd_index(const IndexTuple& index, const Params& params);

/** min(empty) is +infinity, represented by std::nullopt rather than a large integer. */
using ExtendedMin = std::optional<int>;
ExtendedMin extended_min(const std::vector<int>& subset);
bool min_sum_at_least(ExtendedMin a, ExtendedMin b, int bound);

struct OrbitSignature {
  std::vector<int> plus;   // I+ as an increasing list
  std::vector<int> minus;  // I- as an increasing list
  friend bool operator==(const OrbitSignature&, const OrbitSignature&) = default;
  friend auto operator<=>(const OrbitSignature&, const OrbitSignature&) = default;
};

std::vector<OrbitSignature> orbit_closures(const Params& params);

struct Fibration {
  int base_p = 0;  // G(base_p, base_n)
  int base_n = 0;
  int fiber_s = 0;  // T_{fiber_s, fiber_p, fiber_n} and M_{...}
  int fiber_p = 0;
  int fiber_n = 0;
};

struct FibrationReport {
  std::string label;  // "A", "B", "C" or "none"
  std::vector<Fibration> fibrations;
};

FibrationReport fibration_report(const Params& params);

}  // namespace kausz
