#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reflcat/families/spec.hpp"
#include "reflcat/group/matgroup.hpp"
#include "reflcat/quad/space.hpp"

namespace reflcat::families {

using ff::Matrix;
using ff::SquareClass;
using quad::QuadraticSpace;

enum class OrthogonalVariant { full, class1, class2 };

struct DiscriminantConvention {
  std::string name;
  std::optional<SquareClass> value;  // nullopt when that Gram matrix is degenerate
};

struct ConstructedGroup {
  FamilySpec spec;
  QuadraticSpace space;
  group::MatGroup group;
  std::optional<std::uint64_t> expected_order;
  std::optional<SquareClass> expected_discriminant;
  // H families: discriminant under each Gram convention, canonical first.
  std::vector<DiscriminantConvention> conventions;
};

ConstructedGroup build_coxeter(Family family, unsigned n, std::uint32_t p);
ConstructedGroup build_abar(unsigned n, std::uint32_t p);
ConstructedGroup build_h(Family family, std::uint32_t p, std::optional<ff::Residue> zeta = std::nullopt);
ConstructedGroup build_i2(std::uint32_t p, unsigned d, Sign sign);
ConstructedGroup build_orthogonal(const QuadraticSpace& space, OrthogonalVariant variant);
// Dispatch on the family; checks admissibility first.
ConstructedGroup build(const FamilySpec& spec);

// Standard space for an orthogonal spec: disc selects the odd-dimensional
// form, sign the even-dimensional one.
QuadraticSpace orthogonal_space(const FamilySpec& spec);

// The smaller square root of 5 and alpha = (3 + zeta) / 2.
ff::Residue default_zeta(std::uint32_t p);
ff::Residue h_alpha(std::uint32_t p, ff::Residue zeta);

// Same matrices on the space with form gamma Q, gamma the canonical nonsquare.
// Throws DomainError when the group is reducible.
ConstructedGroup twisted_form(const ConstructedGroup& c);

// |O(V)| for the standard space of the given dimension; sign only matters in
// even dimension. nullopt on 64-bit overflow.
std::optional<std::uint64_t> orthogonal_order(unsigned dim, std::uint32_t p, Sign sign);
// Witt sign of an even-dimensional space.
Sign space_sign(const QuadraticSpace& s);

}  // namespace reflcat::families
