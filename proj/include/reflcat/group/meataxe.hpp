#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "reflcat/ff/linalg.hpp"
#include "reflcat/ff/matrix.hpp"

namespace reflcat::group {

using ff::Matrix;
using ff::Subspace;

struct IrreducibilityResult {
  bool irreducible = false;
  // A proper nonzero invariant subspace when reducible.
  std::optional<Subspace> invariant_subspace;
};

// Smallest subspace containing v and invariant under the matrices.
Subspace spin(const ff::PrimeField& f, const std::vector<Matrix>& gens, const ff::Vec& v);

// Holt-Rees test on the module F_p^n given by the action matrices. Randomness
// is seeded for reproducibility. An empty generator list is the trivial
// action (irreducible only for n = 1).
IrreducibilityResult meataxe(const std::vector<Matrix>& gens, std::size_t dim, const ff::PrimeField& f,
                             std::uint64_t seed = 0);

// dim End_G(V), from the linear system X M_g = M_g X.
std::size_t endo_algebra_dim(const std::vector<Matrix>& gens, std::size_t dim, const ff::PrimeField& f);

}  // namespace reflcat::group
