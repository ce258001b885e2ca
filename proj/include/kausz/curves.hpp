#pragma once

#include "kausz/picard.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace kausz {

/** gamma_l, zeta^l_j, zeta^{l,k}_{u,v}, delta^l_{m1,m2}, Delta^l_{m1,m2}. */
struct CurveId {
  enum class Family { gamma, zeta, zetaUV, delta, Delta };
  Family family = Family::gamma;
  int l = 0;
  int j = 0;
  int k = 0, u = 0, v = 0;
  int m1 = 0, m2 = 0;

  std::string family_name() const;
  std::string str() const;  // "zetaUV(l=0,k=1,u=1,v=5)"
  friend bool operator==(const CurveId&, const CurveId&) = default;
  friend auto operator<=>(const CurveId&, const CurveId&) = default;
};

struct CurveRecord {
  CurveId id;
  std::vector<int> ivec;              // against H, D_1^-..D_r^-, D_1^+..D_r^+
  std::string lemma;                  // source of ivec
  std::optional<Rational> ref_anti_k; // printed closed form for -K . curve
  std::string ref_lemma;
  std::string note;                   // citation remarks, if any
};

/** Every curve of the catalog for normalized params, in canonical order. */
std::vector<CurveRecord> catalog(const Params& params);

/** Linear pairing over the spanning symbols; the class must live on T. */
Rational intersect(const DivisorClass& cls, const CurveRecord& curve);

/** Pairing of a class on M with a curve lying in M = D_1^-. */
Rational intersect_on_M(const DivisorClass& cls, const CurveRecord& curve);

/** The l = 0 families zeta^0_j, zeta^{0,k}_{u,v}, delta^0_{m1,m2}, which lie in M. */
bool lies_in_M(const CurveId& id);

struct DegreeRow {
  CurveId id;
  Rational derived;
  std::optional<Rational> reference;
  std::string reference_lemma;
  bool match = false;
};

/**
 * T: -K_T paired with every curve, against the printed closed forms.
 * M: (-K_T - D_1^-) paired with the l = 0 curves, against -K_M of the canonical-class lemma.
 */
std::vector<DegreeRow> anticanonical_degrees(const Params& params, Space space);

struct ConsistencyRow {
  CurveId id;
  SpanSymbol symbol;  // the eliminated symbol
  Rational tabulated;
  Rational expanded;
};

/** Eliminated-symbol rows where the tabulated number differs from the relation pairing. */
std::vector<ConsistencyRow> relation_consistency(const Params& params, std::size_t* checked = nullptr);

struct PositivityReport {
  Params params;
  std::size_t t_curves = 0;
  std::vector<CurveId> negative;     // -K_T . c < 0
  std::vector<CurveId> zero;         // -K_T . c = 0
  bool zero_set_expected = false;    // zero set == {gamma_l : 1 <= l <= r-2}
  std::string t_verdict;             // "ample", "nef-not-ample", "not-nef"
  bool t_verdict_expected = false;   // ample iff r <= 2
  std::size_t m_curves = 0;
  std::optional<Rational> m_min_degree;
  std::vector<CurveId> m_below_one;  // (-K_T - D_1^-) . c < 1
  std::string m_verdict;             // "ample" or "not-ample"
  bool ok = false;
};

PositivityReport positivity_verdict(const Params& params);

bool nef_on_catalog(const DivisorClass& cls, const std::vector<CurveRecord>& curves);

struct Generator {
  std::string name;
  DivisorClass cls;
};

/** B_0..B_r, D^+, D^- on T; Bcheck_0..Bcheck_r, Dcheck_2..Dcheck_r on M. */
std::vector<Generator> effective_generators(const Params& params, Space space);

/** The printed extremal lists; none for M when p = s. */
std::optional<std::vector<std::string>> printed_extremal_rays(const Params& params, Space space);

bool same_ray(const RationalVector& a, const RationalVector& b);

struct ExtremalReport {
  Params params;
  Space space = Space::T;
  std::vector<std::string> rays;              // computed extremal generators
  std::vector<std::string> dropped_zero;      // generators that reduce to 0
  std::vector<std::string> duplicates;        // "X=Y": X dropped as a positive multiple of Y
  std::optional<std::vector<std::string>> printed;
  bool certificates_ok = true;                // every LP answer re-verified exactly
  bool match = false;                         // rays equal the printed list as sets of rays
};

ExtremalReport extremal_report(const Params& params, Space space);
std::vector<std::string> extremal_rays(const Params& params, Space space);

/** Equality of two named lists as sets of rays after dropping zeros and duplicates. */
bool same_ray_sets(const Params& params, Space space, const std::vector<std::string>& a,
                   const std::vector<std::string>& b);

}  // namespace kausz
