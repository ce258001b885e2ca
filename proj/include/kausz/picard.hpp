#pragma once

#include "kausz/combinatorics.hpp"
#include "kausz/linalg.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace kausz {

enum class Space { T, M };

std::string to_string(Space space);
Space parse_space(std::string_view text);

/** H, D_i^-, D_i^+ on T; Hcheck, Dcheck_i on M. */
struct SpanSymbol {
  enum class Kind { H, Dminus, Dplus, Hcheck, Dcheck };
  Kind kind = Kind::H;
  int index = 0;

  Space space() const { return kind == Kind::Hcheck || kind == Kind::Dcheck ? Space::M : Space::T; }
  std::string str() const;
  friend bool operator==(const SpanSymbol&, const SpanSymbol&) = default;
};

/**
 * Spanning order.  T: H, D_1^-..D_r^-, D_1^+..D_r^+.  M: Hcheck, Dcheck_1..Dcheck_r.
 */
std::vector<SpanSymbol> spanning_symbols(const Params& params, Space space);
int symbol_position(const Params& params, const SpanSymbol& symbol);

/** Exact class over the spanning symbols.  Picard computations need normalized params. */
struct DivisorClass {
  Params params;
  Space space = Space::T;
  RationalVector coeffs;

  Rational operator[](const SpanSymbol& symbol) const { return coeffs(symbol_position(params, symbol)); }
  Rational& operator[](const SpanSymbol& symbol) { return coeffs(symbol_position(params, symbol)); }

  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  DivisorClass& operator*=(const Rational& c);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Rational& c, DivisorClass a) { return a *= c; }
  DivisorClass operator-() const { return Rational(-1) * *this; }
  friend bool operator==(const DivisorClass& a, const DivisorClass& b);

  bool is_zero() const;
  std::string str() const;
};

void require_normalized(const Params& params, const char* what);

DivisorClass zero_class(const Params& params, Space space);
DivisorClass symbol_class(const Params& params, const SpanSymbol& symbol);

/** The relation expressing an eliminated symbol, as a class with that symbol absent. */
DivisorClass eliminated_expansion(const Params& params, const SpanSymbol& symbol);

/** Eliminates D_r^- (p = n-s), D_r^+ (p = s), Dcheck_r (p = n-s), Hcheck (p = s). */
DivisorClass reduce(const DivisorClass& cls);
bool equivalent(const DivisorClass& a, const DivisorClass& b);

/** Free basis in the printed order: H, D^+, D^- on T; Hcheck, Dcheck on M. */
std::vector<SpanSymbol> basis(const Params& params, Space space);
RationalVector reduced_coordinates(const DivisorClass& cls);
DivisorClass from_reduced_coordinates(const Params& params, Space space, const RationalVector& x);

/** Restriction Pic(T) -> Pic(M): H -> Hcheck, D_i^- -> Dcheck_i, D_i^+ -> 0. */
DivisorClass restrict_to_M(const DivisorClass& cls);

struct DivisorName {
  enum class Family { H, Dplus, Dminus, B, Hline, E, K, antiK, Hcheck, Dcheck, Bcheck, KM, antiKM };
  Family family = Family::H;
  int index = 0;

  Space space() const;
  std::string str() const;  // "B_2", "Dplus_1", "antiK", ...
  static DivisorName parse(std::string_view text);
  friend bool operator==(const DivisorName&, const DivisorName&) = default;
};

/** Named divisors on T: Dplus(i), Dminus(i), B(k), Hline(j), E, K, antiK, and H. */
DivisorClass named_divisor(const Params& params, const DivisorName& name);

struct MDivisor {
  DivisorClass cls;
  bool empty = false;  // Bcheck_0 when p = s
};

/** Named divisors on M: Hcheck, Dcheck(i), Bcheck(k), KM, antiKM. */
MDivisor m_named_divisor(const Params& params, const DivisorName& name);

/** Dispatches on the name's space. */
DivisorClass divisor(const Params& params, const DivisorName& name);

enum class Automorphism { USDstar, DUALstar, Usdstar, Dualstar };
std::string to_string(Automorphism which);
Automorphism parse_automorphism(std::string_view text);

/** Column j is the image of spanning symbol j. */
RationalMatrix pullback_auto(const Params& params, Automorphism which);
Space automorphism_space(Automorphism which);

DivisorClass apply_map(const RationalMatrix& map, const DivisorClass& cls);

/** The induced map on reduced coordinates (basis order). */
RationalMatrix reduced_action(const Params& params, Space space, const RationalMatrix& map);

/** h^0(T, H_j) = |I^j_{s,p,n}| = C(s, p-j) C(n-s, j). */
Integer linear_series_dim(const Params& params, int j);

}  // namespace kausz
