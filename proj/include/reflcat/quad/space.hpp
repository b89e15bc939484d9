#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "reflcat/ff/field.hpp"
#include "reflcat/ff/matrix.hpp"

namespace reflcat::quad {

using ff::Matrix;
using ff::PrimeField;
using ff::Residue;
using ff::SquareClass;
using ff::Vec;

// Exhaustive vector scans (isotropic search, reflection enumeration) refuse
// spaces with more than this many vectors.
inline constexpr std::uint64_t kEnumerationCap = 1000000;

enum class Variant { plus_type, minus_type };
enum class WittSign { plus, minus, odd };

std::string_view to_string(WittSign s);

// p^dim, or nullopt when it exceeds cap.
std::optional<std::uint64_t> vector_count(std::uint32_t p, std::size_t dim, std::uint64_t cap = kEnumerationCap);

// The i-th vector of F_p^dim in little-endian base-p order.
Vec vector_from_index(std::uint32_t p, std::size_t dim, std::uint64_t index);

// Q(v) = v^T G v and B(u, v) = u^T G v for a symmetric non-degenerate G.
class QuadraticSpace {
 public:
  // Throws StructuralError for a non-square or non-symmetric Gram matrix and
  // DomainError for a degenerate one.
  explicit QuadraticSpace(Matrix gram);

  static QuadraticSpace standard(const PrimeField& f, std::size_t n, Variant v);
  static QuadraticSpace hyperbolic_plane(const PrimeField& f);
  // Norm form a^2 - gamma b^2 of F_{p^2} in the basis {1, sqrt(gamma)}.
  static QuadraticSpace anisotropic_plane(const PrimeField& f);

  const PrimeField& field() const { return gram_.field(); }
  std::uint32_t p() const { return gram_.field().p(); }
  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }

  Residue q(const Vec& v) const;
  Residue b(const Vec& u, const Vec& v) const;
  Residue det() const { return gram_.det(); }
  SquareClass discriminant() const;

  bool is_isometry(const Matrix& m) const;
  // Throws DomainError when Q(a) = 0.
  Matrix reflection(const Vec& a) const;
  // The same vector space with form d Q.
  QuadraticSpace twist(Residue d) const;
  // Gram matrix of the form in the basis given by the columns of P.
  QuadraticSpace base_change(const Matrix& basis) const;

  friend bool operator==(const QuadraticSpace& a, const QuadraticSpace& b) { return a.gram_ == b.gram_; }

 private:
  Matrix gram_;
};

// Throws StructuralError when the moduli differ.
bool is_isometric(const QuadraticSpace& a, const QuadraticSpace& b);

// Sign of the even-dimensional space from its discriminant alone: plus iff
// (-1)^(dim/2) det is a square.
WittSign witt_sign_from_discriminant(const QuadraticSpace& s);

struct HyperbolicPair {
  Vec u;
  Vec v;
};

struct WittDecomposition {
  std::vector<HyperbolicPair> pairs;
  std::vector<Vec> anisotropic;
  WittSign sign = WittSign::odd;
};

// Exhaustive search; ResourceError when p^dim exceeds the cap.
WittDecomposition witt_decompose(const QuadraticSpace& s, std::uint64_t cap = kEnumerationCap);

// First isotropic nonzero vector of the span of basis (scanning coefficient
// vectors with leading 1), in ambient coordinates.
std::optional<Vec> find_isotropic(const QuadraticSpace& s, const std::vector<Vec>& basis,
                                  std::uint64_t cap = kEnumerationCap);

// Exponent form of the bicharacter attached to Q: (Q(x+y) - Q(x) - Q(y)) / 2.
Residue beta_exponent(const QuadraticSpace& s, const Vec& x, const Vec& y);

}  // namespace reflcat::quad
