#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "reflcat/cohomology/bar.hpp"
#include "reflcat/cohomology/gmodule.hpp"

namespace reflcat::cohomology {

// Cochain-level restriction to the subgroup with the given element indices;
// returns the restricted module too. StructuralError when the indices do not
// form a subgroup.
std::pair<GModule, Cochain> restriction(const GModule& m, const Cochain& f, const std::vector<std::size_t>& subgroup);

// Element indices of <g>.
std::vector<std::size_t> cyclic_subgroup(const GModule& m, std::size_t g);
bool is_subgroup(const GModule& m, const std::vector<std::size_t>& s);
bool is_normal(const GModule& m, const std::vector<std::size_t>& n);

struct StableResult {
  std::size_t dim = 0;
  std::uint64_t sylow_order = 1;
  std::size_t sylow_generator = 0;     // element index in the module
  std::size_t conjugators_checked = 0;
  // Vectors v of A^sigma whose cyclic cocycles (cyclic_cocycle on the Sylow)
  // represent a basis of the stable classes.
  std::vector<Vec> stable_vectors;
};

// H^2(G, A) through the stable classes of H^2(S, A), S a cyclic Sylow
// p-subgroup. DomainError when the Sylow subgroup is not cyclic.
StableResult h2_stable_elements(const GModule& m);

// Order of the Sylow p-subgroup of a group of the given order.
std::uint64_t p_part(std::uint64_t order, std::uint32_t p);

// True when H^i(N, A) = 0 for all i <= n, which forces H^n(G, A) = 0.
// StructuralError when N is not a normal subgroup.
bool lhs_vanishing(const GModule& m, const std::vector<std::size_t>& normal_subgroup, std::size_t n,
                   std::uint64_t budget = kDefaultMemoryBudget);

}  // namespace reflcat::cohomology
