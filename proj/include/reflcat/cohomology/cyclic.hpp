#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "reflcat/cohomology/gmodule.hpp"

namespace reflcat::cohomology {

struct CyclicResult {
  std::size_t degree = 0;
  std::size_t dim = 0;
  std::uint64_t order = 0;
  // Vectors of A whose classes form a basis of ker/im.
  std::vector<Vec> representatives;
};

// H^n(C_m, A) for C_m = <sigma> acting on A = F_p^k through the matrix sigma:
// n = 0: A^sigma; n odd: ker N / im(1 - sigma); n even >= 2: ker(1 - sigma) / im N,
// with N = 1 + sigma + ... + sigma^{m-1}. m is the group order, by default
// the order of sigma; DomainError when sigma^m != 1 or sigma has no order up
// to order_limit.
CyclicResult cyclic_h_n(const Matrix& sigma, std::size_t n, std::uint64_t group_order = 0,
                        std::uint64_t order_limit = 1u << 20);

// The group <g> as a list of powers g^0, g^1, ... acting on A through action.
// action must satisfy action^order(g) = 1.
GModule cyclic_module(const Matrix& g, const Matrix& action);

// Normalized 2-cocycle on the cyclic module with generator element index gen:
// f(gen^i, gen^j) = v when i + j >= m (exponents in [0, m)), else 0.
Cochain cyclic_cocycle(const GModule& m, std::size_t gen, const Vec& v);

// The class of a 2-cocycle on <gen>: sum_i f(gen^i, gen), in A^gen / N A.
Vec cyclic_class_invariant(const GModule& m, std::size_t gen, const Cochain& f);

}  // namespace reflcat::cohomology
