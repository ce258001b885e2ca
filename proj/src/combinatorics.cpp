#include "kausz/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace kausz {

int rank(int s, int p, int n) {
  if (p <= 0 || p >= n || s <= 0 || s >= n)
    throw std::invalid_argument("invalid parameters (s,p,n)=(" + std::to_string(s) + "," +
                                std::to_string(p) + "," + std::to_string(n) +
                                "): need 0<p<n and 0<s<n");
  return std::min({s, n - s, p, n - p});
}

Params Params::make(int s, int p, int n) {
  Params out;
  out.r = rank(s, p, n);
  out.s = s;
  out.p = p;
  out.n = n;
  out.normalized = 2 * p <= n && n <= 2 * s;
  return out;
}

std::string Params::str() const {
  return "(" + std::to_string(s) + "," + std::to_string(p) + "," + std::to_string(n) + ")";
}

std::vector<Params> all_params(int n_max, bool normalized_only) {
  std::vector<Params> out;
  for (int n = 2; n <= n_max; ++n)
    for (int s = 1; s < n; ++s)
      for (int p = 1; p < n; ++p) {
        Params q = Params::make(s, p, n);
        if (!normalized_only || q.normalized) out.push_back(q);
      }
  return out;
}

IndexTuple::IndexTuple(std::vector<int> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 1) throw std::invalid_argument("index entries must be positive");
    if (i > 0 && entries_[i] >= entries_[i - 1])
      throw std::invalid_argument("index entries must be strictly decreasing");
  }
}

IndexTuple IndexTuple::from_set(std::vector<int> entries) {
  std::sort(entries.begin(), entries.end(), std::greater<>());
  return IndexTuple(std::move(entries));
}

int IndexTuple::k_type(int s) const {
  return static_cast<int>(std::count_if(entries_.begin(), entries_.end(), [s](int i) { return i > s; }));
}

bool IndexTuple::contains(int i) const {
  return std::find(entries_.begin(), entries_.end(), i) != entries_.end();
}

std::string IndexTuple::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(entries_[i]);
  }
  return out + ")";
}

int permutation_sign(const std::vector<int>& sequence) {
  int inversions = 0;
  for (std::size_t i = 0; i < sequence.size(); ++i)
    for (std::size_t j = i + 1; j < sequence.size(); ++j)
      if (sequence[i] > sequence[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

std::vector<IndexTuple> index_set(int p, int n) {
  if (p < 0 || p > n) throw std::invalid_argument("index_set: need 0 <= p <= n");
  std::vector<IndexTuple> out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(current.size()) == p) {
      out.push_back(IndexTuple::from_set(current));
      return;
    }
    for (int i = next; i <= n; ++i) {
      current.push_back(i);
      rec(i + 1);
      current.pop_back();
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IndexTuple> restricted_index_set(const Params& params, int k) {
  if (k < 0 || k > params.p)
    throw std::invalid_argument("restricted_index_set: k=" + std::to_string(k) + " outside 0.." +
                                std::to_string(params.p));
  std::vector<IndexTuple> out;
  for (const auto& index : index_set(params.p, params.n))
    if (index.k_type(params.s) == k) out.push_back(index);
  return out;
}

static void check_index(const IndexTuple& index, const Params& params) {
  if (index.size() != params.p || index.size() == 0 || index[0] > params.n)
    throw std::invalid_argument("index " + index.str() + " is not in I_{p,n} for p=" +
                                std::to_string(params.p) + ", n=" + std::to_string(params.n));
}

std::pair<IndexTuple, int> dual_index(const IndexTuple& index, const Params& params) {
  check_index(index, params);
  std::vector<int> complement;
  for (int i = params.n; i >= 1; --i)
    if (!index.contains(i)) complement.push_back(i);
  std::vector<int> sequence = index.entries();
  sequence.insert(sequence.end(), complement.begin(), complement.end());
  return {IndexTuple(std::move(complement)), permutation_sign(sequence)};
}

IndexTuple usd_index(const IndexTuple& index, const Params& params) {
  check_index(index, params);
  std::vector<int> out;
  for (int k = index.size() - 1; k >= 0; --k) out.push_back(params.n + 1 - index[k]);
  return IndexTuple(std::move(out));
}

ExtendedMin extended_min(const std::vector<int>& subset) {
  if (subset.empty()) return std::nullopt;
  return *std::min_element(subset.begin(), subset.end());
}

bool min_sum_at_least(ExtendedMin a, ExtendedMin b, int bound) {
  if (!a || !b) return true;
  return *a + *b >= bound;
}

std::vector<OrbitSignature> orbit_closures(const Params& params) {
  const int r = params.r;
  auto subset = [](unsigned mask, int size) {
    std::vector<int> out;
    for (int i = 0; i < size; ++i)
      if (mask & (1u << i)) out.push_back(i + 1);
    return out;
  };
  std::vector<OrbitSignature> out;
  for (unsigned plus = 0; plus < (1u << r); ++plus)
    for (unsigned minus = 0; minus < (1u << r); ++minus) {
      OrbitSignature sig{subset(plus, r), subset(minus, r)};
      if (min_sum_at_least(extended_min(sig.plus), extended_min(sig.minus), r + 2))
        out.push_back(std::move(sig));
    }
  std::sort(out.begin(), out.end());
  return out;
}

FibrationReport fibration_report(const Params& params) {
  const int s = params.s, p = params.p, n = params.n, q = n - s;
  FibrationReport out;
  if (p < q && p < s) {
    out.label = "A";
    out.fibrations.push_back({p, s, p, p, q + p});
    out.fibrations.push_back({p, q, p, p, s + p});
  } else if (q < p && p < s) {
    out.label = "B";
    out.fibrations.push_back({p, s, q, q, q + p});
    out.fibrations.push_back({s + p - n, s, q, q, 2 * n - s - p});
  } else if (p == q && q < s) {
    out.label = "C";
    out.fibrations.push_back({p, s, p, p, 2 * p});
  } else {
    out.label = "none";
  }
  return out;
}

}  // namespace kausz
