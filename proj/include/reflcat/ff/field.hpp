#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace reflcat::ff {

using Residue = std::uint32_t;
using Vec = std::vector<Residue>;

// Upper bound (exclusive) on supported moduli. Keeps every product of two
// residues plus an accumulator inside 64 bits with room to spare.
inline constexpr std::uint32_t kMaxPrime = 1u << 16;

// Square roots switch from exhaustive scan to Tonelli-Shanks at this modulus.
inline constexpr std::uint32_t kTonelliThreshold = 10000;

enum class SquareClass { square, nonsquare };

std::string_view to_string(SquareClass c);

bool is_prime(std::uint64_t n);

// The prime field F_p for an odd prime p < kMaxPrime. Cheap to copy; every
// matrix and space carries its own copy.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  Residue reduce(std::int64_t x) const {
    const std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const {
    const Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Residue pow(Residue a, std::uint64_t e) const;
  Residue inv(Residue a) const;  // throws DomainError on 0
  Residue div(Residue a, Residue b) const { return mul(a, inv(b)); }
  Residue half() const { return half_; }

  // Euler criterion. Throws DomainError for 0.
  bool is_square(Residue x) const;
  SquareClass square_class(Residue x) const;
  // Canonical representative of a square class: 1 or the least nonsquare.
  Residue representative(SquareClass c) const { return c == SquareClass::square ? 1 : nonsquare_; }

  // Smaller of the two roots, 0 for 0, nullopt for nonresidues.
  std::optional<Residue> sqrt(Residue x) const;

  // Least positive quadratic nonresidue.
  Residue nonsquare() const { return nonsquare_; }
  // Least positive generator of F_p^x.
  Residue primitive_root() const { return primitive_root_; }
  // Multiplicative order of a nonzero residue.
  std::uint32_t order(Residue a) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
  Residue half_;
  Residue nonsquare_;
  Residue primitive_root_;
};

// Elements a + b*sqrt(gamma) of F_{p^2}, gamma the canonical nonsquare.
struct Fp2 {
  Residue a = 0;
  Residue b = 0;
  friend bool operator==(const Fp2&, const Fp2&) = default;
};

class Fp2Field {
 public:
  explicit Fp2Field(const PrimeField& base) : base_(base), gamma_(base.nonsquare()) {}

  const PrimeField& base() const { return base_; }
  Residue gamma() const { return gamma_; }

  Fp2 one() const { return {1, 0}; }
  Fp2 add(Fp2 x, Fp2 y) const { return {base_.add(x.a, y.a), base_.add(x.b, y.b)}; }
  Fp2 mul(Fp2 x, Fp2 y) const;
  Fp2 conj(Fp2 x) const { return {x.a, base_.neg(x.b)}; }
  Fp2 pow(Fp2 x, std::uint64_t e) const;
  // a^2 - gamma b^2
  Residue norm(Fp2 x) const;
  // Generator of the cyclic norm-one subgroup (order p+1).
  Fp2 norm_one_generator() const;
  std::uint64_t order(Fp2 x) const;

 private:
  PrimeField base_;
  Residue gamma_;
};

}  // namespace reflcat::ff
