#include "kausz/picard.hpp"

#include <stdexcept>

namespace kausz {

std::string to_string(Space space) { return space == Space::T ? "T" : "M"; }

Space parse_space(std::string_view text) {
  if (text == "T") return Space::T;
  if (text == "M") return Space::M;
  throw std::invalid_argument("space must be T or M, got '" + std::string(text) + "'");
}

std::string SpanSymbol::str() const {
  switch (kind) {
    case Kind::H: return "H";
    case Kind::Dminus: return "Dminus_" + std::to_string(index);
    case Kind::Dplus: return "Dplus_" + std::to_string(index);
    case Kind::Hcheck: return "Hcheck";
    case Kind::Dcheck: return "Dcheck_" + std::to_string(index);
  }
  return "?";
}

std::vector<SpanSymbol> spanning_symbols(const Params& params, Space space) {
  using K = SpanSymbol::Kind;
  std::vector<SpanSymbol> out;
  if (space == Space::T) {
    out.push_back({K::H, 0});
    for (int i = 1; i <= params.r; ++i) out.push_back({K::Dminus, i});
    for (int i = 1; i <= params.r; ++i) out.push_back({K::Dplus, i});
  } else {
    out.push_back({K::Hcheck, 0});
    for (int i = 1; i <= params.r; ++i) out.push_back({K::Dcheck, i});
  }
  return out;
}

int symbol_position(const Params& params, const SpanSymbol& symbol) {
  using K = SpanSymbol::Kind;
  const int r = params.r;
  if (symbol.kind != K::H && symbol.kind != K::Hcheck && (symbol.index < 1 || symbol.index > r))
    throw std::invalid_argument("symbol index " + std::to_string(symbol.index) + " outside 1.." +
                                std::to_string(r));
  switch (symbol.kind) {
    case K::H:
    case K::Hcheck: return 0;
    case K::Dminus:
    case K::Dcheck: return symbol.index;
    case K::Dplus: return r + symbol.index;
  }
  return 0;
}

void require_normalized(const Params& params, const char* what) {
  if (!params.normalized)
    throw std::domain_error(std::string(what) + " needs normalized parameters 2p <= n <= 2s; got " +
                            params.str() + " (apply normalize first)");
}

static void require_same(const DivisorClass& a, const DivisorClass& b) {
  if (a.space != b.space || a.params != b.params)
    throw std::invalid_argument("divisor classes live on different spaces");
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  require_same(*this, o);
  coeffs += o.coeffs;
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  require_same(*this, o);
  coeffs -= o.coeffs;
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& c) {
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) coeffs(i) *= c;
  return *this;
}

bool operator==(const DivisorClass& a, const DivisorClass& b) {
  return a.space == b.space && a.params == b.params && a.coeffs == b.coeffs;
}

bool DivisorClass::is_zero() const {
  for (Eigen::Index i = 0; i < coeffs.size(); ++i)
    if (coeffs(i) != 0) return false;
  return true;
}

std::string DivisorClass::str() const {
  std::string out;
  const auto symbols = spanning_symbols(params, space);
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (coeffs(i) == 0) continue;
    if (!out.empty()) out += " + ";
    out += to_string(coeffs(i)) + "*" + symbols[i].str();
  }
  return out.empty() ? "0" : out;
}

DivisorClass zero_class(const Params& params, Space space) {
  require_normalized(params, "divisor arithmetic");
  DivisorClass out;
  out.params = params;
  out.space = space;
  out.coeffs = RationalVector::Zero(space == Space::T ? 2 * params.r + 1 : params.r + 1);
  return out;
}

DivisorClass symbol_class(const Params& params, const SpanSymbol& symbol) {
  DivisorClass out = zero_class(params, symbol.space());
  out[symbol] = 1;
  return out;
}

namespace {

using K = SpanSymbol::Kind;

/** H - sum_{i<r} (r+1-i) D_i for the family `kind` (D^-, D^+ or Dcheck). */
DivisorClass top_relation(const Params& params, K kind) {
  const Space space = kind == K::Dcheck ? Space::M : Space::T;
  DivisorClass out = zero_class(params, space);
  out[{space == Space::T ? K::H : K::Hcheck, 0}] = 1;
  for (int i = 1; i < params.r; ++i) out[{kind, i}] = -(params.r + 1 - i);
  return out;
}

}  // namespace

DivisorClass eliminated_expansion(const Params& params, const SpanSymbol& symbol) {
  require_normalized(params, "eliminated_expansion");
  const int r = params.r;
  const bool top = symbol.index == r;
  if (symbol.kind == K::Dminus && top && params.p == params.n - params.s) return top_relation(params, K::Dminus);
  if (symbol.kind == K::Dplus && top && params.p == params.s) return top_relation(params, K::Dplus);
  if (symbol.kind == K::Dcheck && top && params.p == params.n - params.s) return top_relation(params, K::Dcheck);
  if (symbol.kind == K::Hcheck && params.p == params.s) return zero_class(params, Space::M);
  throw std::invalid_argument("symbol " + symbol.str() + " is not eliminated for " + params.str());
}

DivisorClass reduce(const DivisorClass& cls) {
  const Params& params = cls.params;
  require_normalized(params, "reduce");
  DivisorClass out = cls;
  const int r = params.r;
  auto eliminate = [&](const SpanSymbol& symbol) {
    const Rational c = out[symbol];
    if (c == 0) return;
    out[symbol] = 0;
    out += c * eliminated_expansion(params, symbol);
  };
  if (cls.space == Space::T) {
    if (params.p == params.n - params.s) eliminate({K::Dminus, r});
    if (params.p == params.s) eliminate({K::Dplus, r});
  } else {
    if (params.p == params.n - params.s) eliminate({K::Dcheck, r});
    if (params.p == params.s) eliminate({K::Hcheck, 0});
  }
  return out;
}

bool equivalent(const DivisorClass& a, const DivisorClass& b) { return reduce(a - b).is_zero(); }

std::vector<SpanSymbol> basis(const Params& params, Space space) {
  require_normalized(params, "basis");
  const int r = params.r;
  const bool top_minus = params.p == params.n - params.s;  // D_r^- or Dcheck_r eliminated
  const bool top_plus = params.p == params.s;              // D_r^+ or Hcheck eliminated
  std::vector<SpanSymbol> out;
  if (space == Space::T) {
    out.push_back({K::H, 0});
    for (int i = 1; i <= (top_plus ? r - 1 : r); ++i) out.push_back({K::Dplus, i});
    for (int i = 1; i <= (top_minus ? r - 1 : r); ++i) out.push_back({K::Dminus, i});
  } else {
    if (!top_plus) out.push_back({K::Hcheck, 0});
    for (int i = 1; i <= (top_minus ? r - 1 : r); ++i) out.push_back({K::Dcheck, i});
  }
  return out;
}

RationalVector reduced_coordinates(const DivisorClass& cls) {
  const DivisorClass reduced = reduce(cls);
  const auto symbols = basis(cls.params, cls.space);
  RationalVector out(static_cast<Eigen::Index>(symbols.size()));
  for (std::size_t i = 0; i < symbols.size(); ++i) out(i) = reduced[symbols[i]];
  return out;
}

DivisorClass from_reduced_coordinates(const Params& params, Space space, const RationalVector& x) {
  const auto symbols = basis(params, space);
  if (x.size() != static_cast<Eigen::Index>(symbols.size()))
    throw std::invalid_argument("coordinate vector has the wrong length");
  DivisorClass out = zero_class(params, space);
  for (std::size_t i = 0; i < symbols.size(); ++i) out[symbols[i]] = x(i);
  return out;
}

DivisorClass restrict_to_M(const DivisorClass& cls) {
  if (cls.space != Space::T) throw std::invalid_argument("restrict_to_M expects a class on T");
  DivisorClass out = zero_class(cls.params, Space::M);
  out[{K::Hcheck, 0}] = cls[{K::H, 0}];
  for (int i = 1; i <= cls.params.r; ++i) out[{K::Dcheck, i}] = cls[{K::Dminus, i}];
  return out;
}

Space DivisorName::space() const {
  switch (family) {
    case Family::Hcheck:
    case Family::Dcheck:
    case Family::Bcheck:
    case Family::KM:
    case Family::antiKM: return Space::M;
    default: return Space::T;
  }
}

namespace {

struct FamilyName {
  DivisorName::Family family;
  const char* name;
  bool indexed;
};

constexpr FamilyName family_names[] = {
    {DivisorName::Family::H, "H", false},          {DivisorName::Family::Dplus, "Dplus", true},
    {DivisorName::Family::Dminus, "Dminus", true}, {DivisorName::Family::B, "B", true},
    {DivisorName::Family::Hline, "Hline", true},   {DivisorName::Family::E, "E", false},
    {DivisorName::Family::K, "K", false},          {DivisorName::Family::antiK, "antiK", false},
    {DivisorName::Family::Hcheck, "Hcheck", false}, {DivisorName::Family::Dcheck, "Dcheck", true},
    {DivisorName::Family::Bcheck, "Bcheck", true}, {DivisorName::Family::KM, "KM", false},
    {DivisorName::Family::antiKM, "antiKM", false},
};

}  // namespace

std::string DivisorName::str() const {
  for (const auto& f : family_names)
    if (f.family == family) return f.indexed ? std::string(f.name) + "_" + std::to_string(index) : f.name;
  return "?";
}

DivisorName DivisorName::parse(std::string_view text) {
  const auto underscore = text.find('_');
  const std::string_view head = text.substr(0, underscore);
  for (const auto& f : family_names) {
    if (head != f.name) continue;
    if (f.indexed != (underscore != std::string_view::npos)) break;
    DivisorName out{f.family, 0};
    if (f.indexed) {
      const std::string digits(text.substr(underscore + 1));
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) break;
      out.index = std::stoi(digits);
    }
    return out;
  }
  throw std::invalid_argument("unknown divisor name '" + std::string(text) + "'");
}

namespace {

void check_range(int value, int lo, int hi, const char* what) {
  if (value < lo || value > hi)
    throw std::out_of_range(std::string(what) + " index " + std::to_string(value) + " outside " +
                            std::to_string(lo) + ".." + std::to_string(hi));
}

/** H - sum_{i=1}^{r-k} (r-k+1-i) D_i^+ - sum_{i=1}^{k} (k+1-i) D_i^-. */
DivisorClass b_formula(const Params& params, int k) {
  const int r = params.r;
  DivisorClass out = symbol_class(params, {K::H, 0});
  for (int i = 1; i <= r - k; ++i) out[{K::Dplus, i}] -= r - k + 1 - i;
  for (int i = 1; i <= k; ++i) out[{K::Dminus, i}] -= k + 1 - i;
  return out;
}

DivisorClass canonical_T(const Params& params) {
  const int s = params.s, p = params.p, n = params.n, r = params.r;
  DivisorClass out = zero_class(params, Space::T);
  out[{K::H, 0}] = -n;
  for (int i = 1; i <= r; ++i) {
    out[{K::Dminus, i}] = (p - i + 1) * (n - s - i + 1) - 1;
    out[{K::Dplus, i}] = r == p ? (p - i + 1) * (s - i + 1) - 1 : (n - p - i + 1) * (n - s - i + 1) - 1;
  }
  return out;
}

DivisorClass canonical_M(const Params& params) {
  const int s = params.s, p = params.p, n = params.n, r = params.r;
  DivisorClass out = zero_class(params, Space::M);
  out[{K::Hcheck, 0}] = -n;
  out[{K::Dcheck, 1}] = p * (n - s);
  for (int i = 2; i <= r; ++i) out[{K::Dcheck, i}] = (p - i + 1) * (n - s - i + 1) - 1;
  return out;
}

}  // namespace

DivisorClass named_divisor(const Params& params, const DivisorName& name) {
  require_normalized(params, "named_divisor");
  using F = DivisorName::Family;
  const int r = params.r;
  switch (name.family) {
    case F::H: return symbol_class(params, {K::H, 0});
    case F::Dplus: check_range(name.index, 1, r, "Dplus"); return symbol_class(params, {K::Dplus, name.index});
    case F::Dminus: check_range(name.index, 1, r, "Dminus"); return symbol_class(params, {K::Dminus, name.index});
    case F::B:
      check_range(name.index, 0, r, "B");
      if (name.index == 0 && params.p == params.s) return symbol_class(params, {K::Dplus, r});
      if (name.index == r && params.p == params.n - params.s) return symbol_class(params, {K::Dminus, r});
      return b_formula(params, name.index);
    case F::Hline: check_range(name.index, 0, r, "Hline"); return b_formula(params, name.index);
    case F::E: {
      DivisorClass out = zero_class(params, Space::T);
      const int plus = params.p == params.s ? r - 1 : r;
      const int minus = params.p == params.n - params.s ? r - 1 : r;
      for (int i = 1; i <= plus; ++i) out[{K::Dplus, i}] = 1;
      for (int i = 1; i <= minus; ++i) out[{K::Dminus, i}] = 1;
      return out;
    }
    case F::K: return canonical_T(params);
    case F::antiK: return -canonical_T(params);
    default: throw std::invalid_argument("'" + name.str() + "' is not a divisor on T");
  }
}

MDivisor m_named_divisor(const Params& params, const DivisorName& name) {
  require_normalized(params, "m_named_divisor");
  using F = DivisorName::Family;
  const int r = params.r;
  switch (name.family) {
    case F::Hcheck: return {symbol_class(params, {K::Hcheck, 0}), false};
    case F::Dcheck: check_range(name.index, 1, r, "Dcheck"); return {symbol_class(params, {K::Dcheck, name.index}), false};
    case F::Bcheck: {
      const int i = name.index;
      check_range(i, 0, r, "Bcheck");
      if (i == r && params.p == params.n - params.s) return {symbol_class(params, {K::Dcheck, r}), false};
      DivisorClass out = symbol_class(params, {K::Hcheck, 0});
      if (i >= 1) out[{K::Dcheck, 1}] -= i;
      for (int k = 2; k <= i; ++k) out[{K::Dcheck, k}] -= i + 1 - k;
      return {out, i == 0 && params.p == params.s};
    }
    case F::KM: return {canonical_M(params), false};
    case F::antiKM: return {-canonical_M(params), false};
    default: throw std::invalid_argument("'" + name.str() + "' is not a divisor on M");
  }
}

DivisorClass divisor(const Params& params, const DivisorName& name) {
  return name.space() == Space::T ? named_divisor(params, name) : m_named_divisor(params, name).cls;
}

std::string to_string(Automorphism which) {
  switch (which) {
    case Automorphism::USDstar: return "USDstar";
    case Automorphism::DUALstar: return "DUALstar";
    case Automorphism::Usdstar: return "Usdstar";
    case Automorphism::Dualstar: return "Dualstar";
  }
  return "?";
}

Automorphism parse_automorphism(std::string_view text) {
  for (auto a : {Automorphism::USDstar, Automorphism::DUALstar, Automorphism::Usdstar, Automorphism::Dualstar})
    if (text == to_string(a)) return a;
  throw std::invalid_argument("unknown automorphism '" + std::string(text) + "'");
}

Space automorphism_space(Automorphism which) {
  return which == Automorphism::USDstar || which == Automorphism::DUALstar ? Space::T : Space::M;
}

RationalMatrix pullback_auto(const Params& params, Automorphism which) {
  require_normalized(params, "pullback_auto");
  const int s = params.s, p = params.p, n = params.n, r = params.r;
  const bool usd = which == Automorphism::USDstar || which == Automorphism::Usdstar;
  if (usd && n != 2 * s)
    throw std::domain_error(to_string(which) + " needs n = 2s; got " + params.str());
  if (!usd && n != 2 * p)
    throw std::domain_error(to_string(which) + " needs n = 2p; got " + params.str());

  const Space space = automorphism_space(which);
  const auto symbols = spanning_symbols(params, space);
  RationalMatrix map = RationalMatrix::Zero(symbols.size(), symbols.size());
  auto set_image = [&](const SpanSymbol& source, const DivisorClass& image) {
    map.col(symbol_position(params, source)) = image.coeffs;
  };

  if (space == Space::T) {
    set_image({K::H, 0}, symbol_class(params, {K::H, 0}));
    for (int i = 1; i <= r; ++i) {
      set_image({K::Dplus, i}, symbol_class(params, {K::Dminus, i}));
      set_image({K::Dminus, i}, symbol_class(params, {K::Dplus, i}));
    }
    return map;
  }

  for (int i = 2; i <= r; ++i) set_image({K::Dcheck, i}, symbol_class(params, {K::Dcheck, r + 2 - i}));
  DivisorClass d1 = zero_class(params, Space::M);
  DivisorClass h = symbol_class(params, {K::Hcheck, 0});
  if (p == s) {
    for (int i = 2; i <= r; ++i) d1[{K::Dcheck, i}] = -Rational(i - 1, r);
  } else {
    for (int i = 1; i <= r; ++i) {
      d1[{K::Dcheck, i}] = -1;
      h[{K::Dcheck, i}] = -(r + 1 - i);
    }
  }
  set_image({K::Dcheck, 1}, d1);
  set_image({K::Hcheck, 0}, h);
  return map;
}

DivisorClass apply_map(const RationalMatrix& map, const DivisorClass& cls) {
  if (map.cols() != cls.coeffs.size()) throw std::invalid_argument("map and class sizes differ");
  DivisorClass out = cls;
  out.coeffs = map * cls.coeffs;
  return out;
}

RationalMatrix reduced_action(const Params& params, Space space, const RationalMatrix& map) {
  const auto symbols = basis(params, space);
  RationalMatrix out(symbols.size(), symbols.size());
  for (std::size_t j = 0; j < symbols.size(); ++j)
    out.col(j) = reduced_coordinates(apply_map(map, symbol_class(params, symbols[j])));
  return out;
}

Integer linear_series_dim(const Params& params, int j) {
  check_range(j, 0, params.r, "linear_series_dim");
  return binomial(params.s, params.p - j) * binomial(params.n - params.s, j);
}

}  // namespace kausz
