#pragma once

#include "kausz/combinatorics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kausz {

enum class Isomorphism { USD, DUAL };
std::string to_string(Isomorphism iso);

struct Normalization {
  Params params;
  std::vector<Isomorphism> trace;
};

/** Applies DUAL (p -> n-p) when 2p > n, then USD (s -> n-s) when n > 2s. */
Normalization normalize(const Params& params);

enum class DiscreteFactor { USD, DUAL, Usd, Dual };
std::string to_string(DiscreteFactor factor);

struct GroupDescriptor {
  std::string connected;                 // "(GL_3xGL_2)/Z_5", "PGL_4", "Parabolic(4)", ...
  std::vector<DiscreteFactor> discrete;  // semidirect Z/2 factors, in order
  std::string case_label;                // "generic", "USD", "DUAL", "USD+DUAL", "D(a)", ...
  std::optional<std::string> model;      // "P^1", "point", ...
  std::string provenance = "theorem";    // or "from-proof"

  std::string str() const;
  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

GroupDescriptor aut_T(const Params& params);
GroupDescriptor aut_M(const Params& params);

}  // namespace kausz
