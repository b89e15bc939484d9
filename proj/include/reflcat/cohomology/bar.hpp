#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "reflcat/cohomology/gmodule.hpp"

namespace reflcat::cohomology {

inline constexpr std::uint64_t kDefaultMemoryBudget = std::uint64_t{2} << 30;

// Bar differential of a normalized cochain:
// (df)(g1..g_{n+1}) = g1 f(g2..) + sum_i (-1)^i f(.., g_i g_{i+1}, ..) + (-1)^{n+1} f(g1..g_n).
Cochain differential(const GModule& m, const Cochain& f);
bool is_cocycle(const GModule& m, const Cochain& f);

// Size of d^n as a sparse matrix. The elimination itself is also held to the
// budget while it runs.
std::uint64_t bar_memory_estimate(std::size_t group_order, std::size_t module_dim, std::size_t n);

struct CohomologyResult {
  std::size_t degree = 0;
  std::size_t dim = 0;
  std::string method;
  std::uint64_t estimated_bytes = 0;
  std::vector<Cochain> representatives;  // cocycles whose classes form a basis
};

// dim H^n(G, A) = dim C^n - rank d^n - rank d^{n-1} on normalized cochains.
// ResourceError (with the estimate) when the budget is too small.
CohomologyResult bar_h_n(const GModule& m, std::size_t n, bool representatives = false,
                         std::uint64_t budget = kDefaultMemoryBudget);

// Whether c = d(h) for some h; c must be a cocycle of degree >= 1.
bool is_coboundary(const GModule& m, const Cochain& c, std::uint64_t budget = kDefaultMemoryBudget);

}  // namespace reflcat::cohomology
