#pragma once

#include <cstddef>
#include <vector>

#include "reflcat/cohomology/gmodule.hpp"

namespace reflcat::cohomology {

// Exponents in Z/p of the functions gamma_{g,h}(x) and mu_g(x, y) attached to
// a 3-cocycle omega with trivial coefficients; ^g x = g x g^{-1}.
struct TwistData {
  std::size_t order = 0;
  std::vector<Residue> gamma;  // [g][h][x]
  std::vector<Residue> mu;     // [g][x][y]

  Residue gamma_at(std::size_t g, std::size_t h, std::size_t x) const { return gamma[(g * order + h) * order + x]; }
  Residue mu_at(std::size_t g, std::size_t x, std::size_t y) const { return mu[(g * order + x) * order + y]; }
  bool is_trivial() const;
};

// The 3-cocycle identity written as the pentagon of Vec_G with associator omega:
// w(gh,k,l) + w(g,h,kl) = w(g,h,k) + w(g,hk,l) + w(h,k,l).
bool pentagon_holds(const GModule& trivial, const Cochain& omega);

// gamma_{g,h}(x) = w(g,h,x) + w(^{gh}x,g,h) - w(g,^h x,h),
// mu_g(x,y) = w(^g x,g,y) - w(^g x,^g y,g) - w(g,x,y).
// The module must be one-dimensional and trivial; DomainError unless omega
// is a 3-cocycle.
TwistData twist_data(const GModule& trivial, const Cochain& omega);

// omega - omega' is a coboundary.
bool cohomologous(const GModule& trivial, const Cochain& a, const Cochain& b);

}  // namespace reflcat::cohomology
