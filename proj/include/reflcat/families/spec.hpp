#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "reflcat/ff/field.hpp"
#include "reflcat/families/roots.hpp"

namespace reflcat::families {

enum class Family { A, B, D, E6, E7, E8, F4, H3, H4, Abar, I2, O_full, O1, O2 };
enum class Sign { plus, minus };

std::string_view to_string(Family f);
std::optional<Family> family_from_string(std::string_view s);
std::optional<CoxeterType> coxeter_type(Family f);
bool is_orthogonal(Family f);

// Parameters of one family instance. n is the rank (Coxeter, Abar, H) or the
// dimension (orthogonal types); I2 always has n = 2.
struct FamilySpec {
  Family family = Family::A;
  unsigned n = 0;
  std::uint32_t p = 0;
  std::optional<ff::Residue> zeta;       // H3, H4; default is the smaller root of 5
  std::optional<unsigned> d;             // I2
  std::optional<Sign> sign;              // I2 (plus: hyperbolic plane), even-dim orthogonal
  std::optional<ff::SquareClass> disc;   // odd-dim orthogonal

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

FamilySpec make_spec(Family family, unsigned n, std::uint32_t p);

// Grammar: FAMILY ':' key '=' value (',' key '=' value)*, with keys n, dim,
// p, zeta, d, sign (+/-), disc (+/-). Throws DomainError on malformed input.
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& s);

// Short label for tables, e.g. A(3,5), Abar(3,5), I2(5;d=4,+), O1(3,5).
std::string label(const FamilySpec& s);

// Throws DomainError when the parameters fall outside the family's conditions
// on p and n.
void check_admissible(const FamilySpec& s);

// H3/H4 exist over F_p exactly for p = 5 or p^2 = 1 mod 5.
bool h_realizable(std::uint32_t p);
// Independent check: alpha^2 - 3 alpha + 1 has a root in F_p.
bool h_alpha_exists(std::uint32_t p);

}  // namespace reflcat::families
