#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reflcat/families/build.hpp"

namespace reflcat::families {

enum class CheckStatus { pass, fail, skipped };

std::string_view to_string(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  std::string detail;
};

struct VerificationReport {
  std::string label;
  std::uint64_t order = 0;
  SquareClass discriminant = SquareClass::square;
  bool irreducible = false;
  std::size_t endo_dim = 0;
  std::vector<Check> checks;

  bool passed() const;
  const Check* find(std::string_view name) const;
};

// Checks: reflections, irreducible, order, order_oracle, discriminant,
// reflection_closure. Failures are entries, never exceptions.
VerificationReport verify_family(const ConstructedGroup& c, std::uint64_t seed = 0);

struct Rank2Class {
  std::uint64_t order = 0;
  bool irreducible = false;
  bool dihedral = false;
  std::uint64_t d = 0;  // order / 2 when dihedral
  bool divisibility = false;  // d | p-1 (plus) or d | p+1 (minus)
  std::size_t subgroups = 0;  // reflection subgroups with this signature
};

// Every subgroup of O(V) generated by reflections, V the hyperbolic (plus) or
// anisotropic (minus) plane, grouped by order and irreducibility.
std::vector<Rank2Class> classify_rank2_bruteforce(std::uint32_t p, Sign sign);

}  // namespace reflcat::families
