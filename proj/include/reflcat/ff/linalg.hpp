#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "reflcat/ff/matrix.hpp"

namespace reflcat::ff {

struct Rref {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Basis of {x : Mx = 0}, one vector per free column (that coordinate 1, the
// other free coordinates 0), ordered by free column.
std::vector<Vec> kernel_basis(const Matrix& m);
// The pivot columns of M, in column order.
std::vector<Vec> image_basis(const Matrix& m);
// Some x with Mx = b, or nullopt.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

// A subspace of F_p^n held as a reduced echelon basis. Two spaces are equal
// iff their bases are equal.
class Subspace {
 public:
  Subspace(const PrimeField& f, std::size_t ambient);
  static Subspace span(const PrimeField& f, std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace whole(const PrimeField& f, std::size_t ambient);
  // Image of M (as a map F^cols -> F^rows).
  static Subspace image(const Matrix& m);
  static Subspace kernel(const Matrix& m);

  const PrimeField& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Canonical representative of v + W: pivot coordinates cleared.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  Subspace mapped(const Matrix& m) const;
  bool invariant_under(const Matrix& m) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  PrimeField field_;
  std::size_t ambient_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

// Complement of W inside U (W a subspace of U): vectors of U whose classes
// form a basis of U / W.
std::vector<Vec> complement_basis(const Subspace& u, const Subspace& w);

}  // namespace reflcat::ff
