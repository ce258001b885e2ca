#include "kausz/curves.hpp"

#include "kausz/cone.hpp"

#include <algorithm>
#include <stdexcept>

namespace kausz {

std::string CurveId::family_name() const {
  switch (family) {
    case Family::gamma: return "gamma";
    case Family::zeta: return "zeta";
    case Family::zetaUV: return "zetaUV";
    case Family::delta: return "delta";
    case Family::Delta: return "Delta";
  }
  return "?";
}

std::string CurveId::str() const {
  const std::string head = family_name() + "(l=" + std::to_string(l);
  switch (family) {
    case Family::gamma: return head + ")";
    case Family::zeta: return head + ",j=" + std::to_string(j) + ")";
    case Family::zetaUV:
      return head + ",k=" + std::to_string(k) + ",u=" + std::to_string(u) + ",v=" + std::to_string(v) + ")";
    case Family::delta:
    case Family::Delta: return head + ",m1=" + std::to_string(m1) + ",m2=" + std::to_string(m2) + ")";
  }
  return head + ")";
}

namespace {

using F = CurveId::Family;

int delta(int i, int a) { return i == a ? 1 : 0; }

/** Fills the r entries of one symbol family from a Kronecker-delta formula in i. */
template <class Formula>
void fill(std::vector<int>& ivec, int offset, int r, Formula formula) {
  for (int i = 1; i <= r; ++i) ivec[offset + i - 1] = formula(i);
}

struct Builder {
  const Params& params;
  int s, p, n, r;
  std::vector<CurveRecord> out;

  explicit Builder(const Params& q) : params(q), s(q.s), p(q.p), n(q.n), r(q.r) {}

  CurveRecord& add(CurveId id, const char* lemma, std::optional<int> ref, const char* ref_lemma) {
    CurveRecord record;
    record.id = id;
    record.ivec.assign(2 * r + 1, 0);
    record.lemma = lemma;
    if (ref) record.ref_anti_k = Rational(*ref);
    record.ref_lemma = ref_lemma;
    out.push_back(std::move(record));
    return out.back();
  }
  int minus() const { return 1; }
  int plus() const { return 1 + r; }

  void gammas() {
    for (int l = 0; l <= r - 1; ++l) {
      CurveId id{F::gamma, l};
      const int ref = r == 1 ? 2 : delta(0, l) + delta(r - 1, l);
      auto& c = add(id, "i1", ref, "vki1");
      c.ivec[0] = 1;
      fill(c.ivec, minus(), r, [&](int i) { return delta(i, l + 1) - delta(i, l + 2); });
      fill(c.ivec, plus(), r, [&](int i) { return delta(i, r - l) - delta(i, r - l + 1); });
    }
  }

  void zetas(int l) {
    for (int j = 2; j <= r; ++j) {
      CurveId id{F::zeta, l, j};
      if (l == 0) {
        auto& c = add(id, "i2", 3 - delta(r, j), "i2");
        fill(c.ivec, minus(), r, [&](int i) { return -delta(i, j - 1) + 2 * delta(i, j) - delta(i, j + 1); });
        continue;
      }
      const bool low = j <= r - l;
      const bool high = j >= r - l + 2;
      if (!low && !high) continue;
      auto& c = add(id, "i5", 2 + delta(r - l, j) + delta(r, j), "i5");
      if (low) {
        const int m = l + j;
        fill(c.ivec, minus(), r, [&](int i) { return -delta(i, m - 1) + 2 * delta(i, m) - delta(i, m + 1); });
      } else {
        fill(c.ivec, plus(), r, [&](int i) { return -delta(i, j - 1) + 2 * delta(i, j) - delta(i, j + 1); });
      }
    }
  }

  // zeta^{l,k}_{u,v} with 1 <= k <= r-l
  void zeta_uv_lower(int l) {
    for (int k = 1; k <= r - l; ++k) {
      const int lk = l + k;
      const bool last = k == r - l;
      for (int v = s + lk + 1; v <= n; ++v) {
        std::optional<int> ref;
        if (v <= r + s - 1) ref = 2 * (v - s - lk);
        else if (v == r + s && !last) ref = 2 * (r - lk) + 1;
        else if (v >= r + s + 1 && !last) ref = n - s + p - 2 * lk + 1;
        else if (v >= r + s + 1 && last) ref = n - s + p - 2 * r;
        auto& c = add({F::zetaUV, l, 0, k, lk, v}, "li1", ref, "vkli1");
        if (v == s + lk + 1)
          fill(c.ivec, minus(), r, [&](int i) { return -delta(i, lk) + 2 * delta(i, lk + 1) - delta(i, lk + 2); });
        else
          fill(c.ivec, minus(), r, [&](int i) {
            return -delta(i, lk) + delta(i, lk + 1) + delta(i, v - s) - delta(i, v - s + 1);
          });
      }
      for (int u = lk + 1; u <= p; ++u) {
        std::optional<int> ref;
        if (u <= r - 1) ref = 2 * (u - lk);
        else if (u == r && !last) ref = 2 * (r - lk) + 1;
        else if (u >= r + 1 && !last) ref = n - s + p - 2 * lk + 1;
        else if (u >= r + 1 && last) ref = n - s + p - 2 * r;
        auto& c = add({F::zetaUV, l, 0, k, u, s + lk}, "li1", ref, "vkli1");
        if (u == lk + 1)
          fill(c.ivec, minus(), r, [&](int i) { return -delta(i, lk) + 2 * delta(i, lk + 1) - delta(i, lk + 2); });
        else
          fill(c.ivec, minus(), r, [&](int i) {
            return -delta(i, lk) + delta(i, lk + 1) + delta(i, u) - delta(i, u + 1);
          });
      }
    }
  }

  // zeta^{l,k}_{u,v} with r-l+1 <= k <= r
  void zeta_uv_upper(int l) {
    const int sp = s - p;
    for (int k = r - l + 1; k <= r; ++k) {
      for (int v = 1; v <= sp + r - k; ++v) {
        std::optional<int> ref;
        if (v >= sp + 2) ref = 2 * (sp + r - k + 1 - v);
        else if (v == sp + 1 && k <= r - 1) ref = 2 * (r - k) + 1;
        else if (v <= sp && k <= r - 1) ref = 2 * (r - k) + sp + 1;
        else if (v <= sp && k == r) ref = sp;
        auto& c = add({F::zetaUV, l, 0, k, r - k + 1, v}, "li2", ref, "vkli2");
        if (v == sp + r - k)
          fill(c.ivec, plus(), r, [&](int i) { return -delta(i, k) + 2 * delta(i, k + 1) - delta(i, k + 2); });
        else
          fill(c.ivec, plus(), r, [&](int i) {
            return -delta(i, k) + delta(i, k + 1) + delta(i, sp + r + 1 - v) - delta(i, sp + r + 2 - v);
          });
      }
      for (int u = 1; u <= r - k; ++u) {
        std::optional<int> ref;
        if (u >= 2) ref = 2 * (r - k + 1 - u);
        else if (u == 1 && k <= r - 1) ref = 2 * (r - k) + 1;
        auto& c = add({F::zetaUV, l, 0, k, u, sp + r - k + 1}, "li2", ref, "vkli2");
        if (u == r - k)
          fill(c.ivec, plus(), r, [&](int i) { return -delta(i, k) + 2 * delta(i, k + 1) - delta(i, k + 2); });
        else
          fill(c.ivec, plus(), r, [&](int i) {
            return -delta(i, k) + delta(i, k + 1) + delta(i, r + 1 - u) - delta(i, r + 2 - u);
          });
      }
    }
  }

  void fill_delta_vector(CurveRecord& c, int l, int m1, int m2) {
    c.ivec[0] = 1;
    fill(c.ivec, minus(), r, [&](int i) { return delta(i, l + m1) - delta(i, l + m1 + 1); });
    fill(c.ivec, plus(), r, [&](int i) { return delta(i, r - l + m2) - delta(i, r - l + m2 + 1); });
  }

  void deltas(int l) {
    if (l == r && !(n - s < p)) return;
    for (int m1 = 1; m1 <= p - l; ++m1)
      for (int m2 = 1; m2 <= s - p + l; ++m2) {
        const int a = m1 <= r - l - 1 ? 0 : (m1 == r - l ? 1 : 2);
        const int b = m2 <= l - 1 ? 0 : (m2 == l ? 1 : 2);
        const int table[3][3] = {
            {2 * m1 + 2 * m2 - 2, 2 * m1 + 2 * l - 1, 2 * m1 + 2 * l - 1 + s - p},
            {2 * (r - l + m2) - 1, 2 * r, 2 * r + s - p},
            {2 * (r - l + m2) - 1 + s + p - n, n - s + p, n},
        };
        auto& c = add({F::delta, l, 0, 0, 0, 0, m1, m2}, "li4", table[a][b], "vkli4");
        fill_delta_vector(c, l, m1, m2);
      }
  }

  void big_deltas(int l) {
    if (l == 0 || (l == r && !(p < n - s))) return;
    for (int m1 = 1; m1 <= n - s - l; ++m1)
      for (int m2 = 1; m2 <= l; ++m2) {
        const int a = m1 <= r - l - 1 ? 0 : (m1 == r - l ? 1 : 2);
        const int b = m2 <= l - 1 ? 0 : 1;
        const int table[3][2] = {
            {2 * m1 + 2 * m2 - 2, 2 * m1 + 2 * l - 1},
            {2 * (r - l + m2) - 1, 2 * r},
            {2 * (r - l + m2) - 1 + n - s - p, n - s + p},
        };
        auto& c = add({F::Delta, l, 0, 0, 0, 0, m1, m2}, "li5", table[a][b], "vkli5");
        if (l < r) c.note = "the text cites the li1 table with l=r for these curves; the li5 table is used";
        fill_delta_vector(c, l, m1, m2);
      }
  }
};

}  // namespace

std::vector<CurveRecord> catalog(const Params& params) {
  require_normalized(params, "catalog");
  Builder b(params);
  b.gammas();
  for (int l = 0; l <= params.r; ++l) {
    b.zetas(l);
    b.zeta_uv_lower(l);
    b.zeta_uv_upper(l);
    b.deltas(l);
    b.big_deltas(l);
  }
  std::sort(b.out.begin(), b.out.end(), [](const CurveRecord& x, const CurveRecord& y) { return x.id < y.id; });
  return std::move(b.out);
}

Rational intersect(const DivisorClass& cls, const CurveRecord& curve) {
  if (cls.space != Space::T) throw std::invalid_argument("intersect: class must live on T");
  if (cls.coeffs.size() != static_cast<Eigen::Index>(curve.ivec.size()))
    throw std::invalid_argument("intersect: class and curve belong to different parameters");
  Rational total = 0;
  for (std::size_t i = 0; i < curve.ivec.size(); ++i)
    if (curve.ivec[i] != 0) total += cls.coeffs(i) * curve.ivec[i];
  return total;
}

bool lies_in_M(const CurveId& id) { return id.l == 0 && id.family != F::gamma; }

Rational intersect_on_M(const DivisorClass& cls, const CurveRecord& curve) {
  if (cls.space != Space::M) throw std::invalid_argument("intersect_on_M: class must live on M");
  if (!lies_in_M(curve.id)) throw std::invalid_argument("intersect_on_M: " + curve.id.str() + " is not in M");
  Rational total = 0;
  for (Eigen::Index i = 0; i < cls.coeffs.size(); ++i) total += cls.coeffs(i) * curve.ivec[i];
  return total;
}

std::vector<DegreeRow> anticanonical_degrees(const Params& params, Space space) {
  const auto curves = catalog(params);
  const DivisorClass anti_k = named_divisor(params, {DivisorName::Family::antiK});
  std::vector<DegreeRow> out;
  if (space == Space::T) {
    for (const auto& c : curves) {
      DegreeRow row{c.id, intersect(anti_k, c), c.ref_anti_k, c.ref_lemma};
      row.match = row.reference && *row.reference == row.derived;
      out.push_back(std::move(row));
    }
    return out;
  }
  const DivisorClass restricted = anti_k - named_divisor(params, {DivisorName::Family::Dminus, 1});
  const DivisorClass anti_km = m_named_divisor(params, {DivisorName::Family::antiKM}).cls;
  for (const auto& c : curves) {
    if (!lies_in_M(c.id)) continue;
    DegreeRow row{c.id, intersect(restricted, c), intersect_on_M(anti_km, c), "mkan"};
    row.match = *row.reference == row.derived;
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<ConsistencyRow> relation_consistency(const Params& params, std::size_t* checked) {
  using K = SpanSymbol::Kind;
  std::vector<SpanSymbol> eliminated;
  if (params.p == params.n - params.s) eliminated.push_back({K::Dminus, params.r});
  if (params.p == params.s) eliminated.push_back({K::Dplus, params.r});
  std::vector<ConsistencyRow> out;
  std::size_t count = 0;
  for (const auto& c : catalog(params))
    for (const auto& symbol : eliminated) {
      ++count;
      const Rational tabulated = c.ivec[symbol_position(params, symbol)];
      const Rational expanded = intersect(eliminated_expansion(params, symbol), c);
      if (tabulated != expanded) out.push_back({c.id, symbol, tabulated, expanded});
    }
  if (checked) *checked = count;
  return out;
}

bool nef_on_catalog(const DivisorClass& cls, const std::vector<CurveRecord>& curves) {
  return std::all_of(curves.begin(), curves.end(), [&](const CurveRecord& c) { return intersect(cls, c) >= 0; });
}

PositivityReport positivity_verdict(const Params& params) {
  PositivityReport report;
  report.params = params;
  const int r = params.r;
  for (const auto& row : anticanonical_degrees(params, Space::T)) {
    ++report.t_curves;
    if (row.derived < 0) report.negative.push_back(row.id);
    if (row.derived == 0) report.zero.push_back(row.id);
  }
  std::vector<CurveId> expected_zero;
  for (int l = 1; l <= r - 2; ++l) expected_zero.push_back({F::gamma, l});
  report.zero_set_expected = report.zero == expected_zero;
  if (!report.negative.empty())
    report.t_verdict = "not-nef";
  else
    report.t_verdict = report.zero.empty() ? "ample" : "nef-not-ample";
  report.t_verdict_expected = (report.t_verdict == "ample") == (r <= 2) && report.negative.empty();

  for (const auto& row : anticanonical_degrees(params, Space::M)) {
    ++report.m_curves;
    if (!report.m_min_degree || row.derived < *report.m_min_degree) report.m_min_degree = row.derived;
    if (row.derived < 1) report.m_below_one.push_back(row.id);
  }
  report.m_verdict = report.m_below_one.empty() ? "ample" : "not-ample";
  report.ok = report.negative.empty() && report.zero_set_expected && report.t_verdict_expected &&
              report.m_below_one.empty();
  return report;
}

std::vector<Generator> effective_generators(const Params& params, Space space) {
  require_normalized(params, "effective_generators");
  std::vector<std::string> names;
  const int r = params.r;
  if (space == Space::T) {
    for (int k = 0; k <= r; ++k) names.push_back("B_" + std::to_string(k));
    for (int i = 1; i <= r; ++i) names.push_back("Dplus_" + std::to_string(i));
    for (int i = 1; i <= r; ++i) names.push_back("Dminus_" + std::to_string(i));
  } else {
    for (int k = 0; k <= r; ++k) names.push_back("Bcheck_" + std::to_string(k));
    for (int i = 2; i <= r; ++i) names.push_back("Dcheck_" + std::to_string(i));
  }
  std::vector<Generator> out;
  for (const auto& name : names) out.push_back({name, divisor(params, DivisorName::parse(name))});
  return out;
}

std::optional<std::vector<std::string>> printed_extremal_rays(const Params& params, Space space) {
  require_normalized(params, "printed_extremal_rays");
  const int r = params.r;
  const bool minus_top = params.p == params.n - params.s;
  const bool plus_top = params.p == params.s;
  std::vector<std::string> out;
  auto range = [&](const char* stem, int lo, int hi) {
    for (int i = lo; i <= hi; ++i) out.push_back(std::string(stem) + std::to_string(i));
  };
  if (space == Space::T) {
    out = {"B_0", "B_" + std::to_string(r)};
    range("Dplus_", 1, plus_top ? r - 1 : r);
    range("Dminus_", 1, minus_top ? r - 1 : r);
    return out;
  }
  if (plus_top) return std::nullopt;
  range("Dcheck_", 2, minus_top ? r - 1 : r);
  out.push_back("Bcheck_0");
  out.push_back("Bcheck_" + std::to_string(r));
  return out;
}

bool same_ray(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) return false;
  Eigen::Index pivot = -1;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != 0) {
      pivot = i;
      break;
    }
  if (pivot < 0) return b.isZero();  // both zero counts as the same (degenerate) ray
  if (b(pivot) == 0 || (a(pivot) > 0) != (b(pivot) > 0)) return false;
  const Rational scale = b(pivot) / a(pivot);
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) * scale != b(i)) return false;
  return true;
}

namespace {

struct RayList {
  std::vector<std::string> names;
  std::vector<RationalVector> rays;
  std::vector<std::string> zero;
  std::vector<std::string> duplicates;
};

RayList deduplicate(const Params& params, Space space, const std::vector<std::string>& names) {
  RayList out;
  for (const auto& name : names) {
    const RationalVector x = reduced_coordinates(divisor(params, DivisorName::parse(name)));
    if (x.isZero()) {
      out.zero.push_back(name);
      continue;
    }
    auto it = std::find_if(out.rays.begin(), out.rays.end(), [&](const RationalVector& y) { return same_ray(x, y); });
    if (it != out.rays.end()) {
      out.duplicates.push_back(name + "=" + out.names[it - out.rays.begin()]);
      continue;
    }
    out.names.push_back(name);
    out.rays.push_back(x);
  }
  (void)space;
  return out;
}

}  // namespace

bool same_ray_sets(const Params& params, Space space, const std::vector<std::string>& a,
                   const std::vector<std::string>& b) {
  const RayList x = deduplicate(params, space, a), y = deduplicate(params, space, b);
  if (x.rays.size() != y.rays.size()) return false;
  for (const auto& ray : x.rays)
    if (std::none_of(y.rays.begin(), y.rays.end(), [&](const RationalVector& z) { return same_ray(ray, z); }))
      return false;
  return true;
}

ExtremalReport extremal_report(const Params& params, Space space) {
  ExtremalReport report;
  report.params = params;
  report.space = space;
  std::vector<std::string> names;
  for (const auto& g : effective_generators(params, space)) names.push_back(g.name);
  const RayList list = deduplicate(params, space, names);
  report.dropped_zero = list.zero;
  report.duplicates = list.duplicates;
  const Eigen::Index dim = list.rays.empty() ? 0 : list.rays.front().size();
  for (std::size_t i = 0; i < list.rays.size(); ++i) {
    RationalMatrix others(dim, static_cast<Eigen::Index>(list.rays.size() - 1));
    for (std::size_t j = 0, c = 0; j < list.rays.size(); ++j)
      if (j != i) others.col(c++) = list.rays[j];
    const ConeMembership m = cone_membership(others, list.rays[i]);
    if (!verify_membership(others, list.rays[i], m)) report.certificates_ok = false;
    if (!m.member) report.rays.push_back(list.names[i]);
  }
  report.printed = printed_extremal_rays(params, space);
  report.match = report.printed && same_ray_sets(params, space, report.rays, *report.printed);
  return report;
}

std::vector<std::string> extremal_rays(const Params& params, Space space) {
  return extremal_report(params, space).rays;
}

}  // namespace kausz
