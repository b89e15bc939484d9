#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace reflcat::families {

// Integer vectors in doubled coordinates: every entry is twice the usual
// Euclidean coordinate, so half-integral roots (E8, F4) stay integral and the
// real inner product is dot/4.
using IntVec = std::vector<std::int64_t>;

enum class CoxeterType { A, B, D, E6, E7, E8, F4 };

std::string_view to_string(CoxeterType t);

struct RootData {
  CoxeterType type;
  unsigned rank;
  std::vector<IntVec> simple;  // simple roots, doubled coordinates
};

// Bourbaki realizations. Throws DomainError for ranks outside the family.
RootData simple_roots(CoxeterType type, unsigned rank);

// Gram matrix of the simple roots under the real inner product, times 4.
std::vector<IntVec> gram_times4(const RootData& r);

// All roots: closure of the simple roots under the simple reflections.
std::vector<IntVec> root_closure(const RootData& r);

// Number of roots and Weyl group order from the classification.
std::uint64_t expected_root_count(CoxeterType type, unsigned rank);
std::uint64_t weyl_order(CoxeterType type, unsigned rank);

}  // namespace reflcat::families
