#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reflcat/families/spec.hpp"

namespace reflcat::fusion {

enum class Tier { fast, full, stretch };

std::string_view to_string(Tier t);
std::optional<Tier> tier_from_string(std::string_view s);

// Whether the tier builds and verifies groups of this dimension over F_p.
bool tier_builds(Tier t, unsigned dim, std::uint32_t p);

// Order from the closed formulas, or nullopt on overflow.
std::optional<std::uint64_t> formula_order(const families::FamilySpec& s);

// Tabulated H^2(G, V): "F_p" / "F_3^2" for the listed orthogonal groups,
// "0" otherwise.
std::string h2_tabulated(const families::FamilySpec& s);
bool h2_unresolved(const families::FamilySpec& s);

struct H2Computation {
  std::string value;   // "0", "F_5", "F_5^2", or "-" when not computed
  std::string method;  // coprime, lhs, stable, or the reason it was skipped
};

// H^2(G, V) by the cheapest applicable method: p not dividing |G|, a central
// -id, or stable elements on a cyclic Sylow subgroup.
H2Computation compute_h2(const families::FamilySpec& s, std::uint64_t order_limit = 20000);

struct ClassificationRow {
  families::FamilySpec spec;
  std::string group;
  unsigned dim = 0;
  std::optional<std::uint64_t> order;
  std::string order_source;  // closure, chain or formula
  std::string irreducible;   // yes, no, or - when not built
  std::string h2;
  H2Computation h2_computed;
  std::string extensions;
  std::string status;        // verified, formula-only, unresolved
};

// Irreducible reflection groups over F_p of dimension at most max_dim, in
// the order of the classification table.
std::vector<families::FamilySpec> classification_specs(std::uint32_t p, unsigned max_dim);

std::vector<ClassificationRow> classification_report(std::uint32_t p, unsigned max_dim, Tier tier = Tier::fast,
                                                     std::uint64_t seed = 0);

}  // namespace reflcat::fusion
