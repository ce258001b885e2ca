#include "kausz/classifier.hpp"

namespace kausz {

std::string to_string(Isomorphism iso) { return iso == Isomorphism::USD ? "USD" : "DUAL"; }

std::string to_string(DiscreteFactor factor) {
  switch (factor) {
    case DiscreteFactor::USD: return "USD";
    case DiscreteFactor::DUAL: return "DUAL";
    case DiscreteFactor::Usd: return "Usd";
    case DiscreteFactor::Dual: return "Dual";
  }
  return "?";
}

Normalization normalize(const Params& params) {
  Normalization out{params, {}};
  if (2 * out.params.p > out.params.n) {
    out.params = Params::make(out.params.s, out.params.n - out.params.p, out.params.n);
    out.trace.push_back(Isomorphism::DUAL);
  }
  if (out.params.n > 2 * out.params.s) {
    out.params = Params::make(out.params.n - out.params.s, out.params.p, out.params.n);
    out.trace.push_back(Isomorphism::USD);
  }
  return out;
}

std::string GroupDescriptor::str() const {
  std::string out = connected;
  for (auto f : discrete) out += " x| Z/2(" + to_string(f) + ")";
  if (model) out += " on " + *model;
  return out;
}

namespace {

std::string n_str(int k) { return std::to_string(k); }

std::string gl_quotient(int s, int n) { return "(GL_" + n_str(s) + "xGL_" + n_str(n - s) + ")/Z_" + n_str(n); }
std::string pgl_product(int s, int n) { return "PGL_" + n_str(s) + "xPGL_" + n_str(n - s); }
std::string projective(int d) { return "P^" + n_str(d); }

}  // namespace

GroupDescriptor aut_T(const Params& input) {
  const auto [q, trace] = normalize(input);
  const int s = q.s, p = q.p, n = q.n;
  if (s == 1 && p == 1 && n == 2) return {"PGL_2", {}, "D(a)", projective(1)};
  if (p == 1 && n == s + 1) return {"Parabolic(" + n_str(n) + ")", {}, "D(b)", std::nullopt};
  const std::string group = gl_quotient(s, n);
  if (n == 2 * s && n == 2 * p) return {group, {DiscreteFactor::USD, DiscreteFactor::DUAL}, "USD+DUAL", std::nullopt};
  if (n == 2 * s) return {group, {DiscreteFactor::USD}, "USD", std::nullopt};
  if (n == 2 * p) return {group, {DiscreteFactor::DUAL}, "DUAL", std::nullopt};
  return {group, {}, "generic", std::nullopt};
}

GroupDescriptor aut_M(const Params& input) {
  const auto [q, trace] = normalize(input);
  const int s = q.s, p = q.p, n = q.n;
  if (s == 1 && p == 1 && n == 2) return {"trivial", {}, "D(a)", "point"};
  if (s == 2 && p == 2 && n == 4) return {"PGL_4", {}, "D(b)", projective(3)};
  if (p == 1 && n == s + 1)
    return {"PGL_" + n_str(n - 1), {}, "p=1,n-s=1", projective(n - 2), "from-proof"};
  if (p == 1 && n - s < s)
    return {pgl_product(s, n), {}, "p=1,n-s<s", projective(s - 1) + "x" + projective(n - s - 1), "from-proof"};
  if (p == 1)
    return {pgl_product(s, n), {DiscreteFactor::Usd}, "p=1,n-s=s", projective(s - 1) + "x" + projective(s - 1),
            "from-proof"};
  const std::string group = pgl_product(s, n);
  if (n == 2 * s && n == 2 * p) return {group, {DiscreteFactor::Usd, DiscreteFactor::Dual}, "Usd+Dual", std::nullopt};
  if (n == 2 * s) return {group, {DiscreteFactor::Usd}, "Usd", std::nullopt};
  if (n == 2 * p) return {group, {DiscreteFactor::Dual}, "Dual", std::nullopt};
  return {group, {}, "generic", std::nullopt};
}

}  // namespace kausz
