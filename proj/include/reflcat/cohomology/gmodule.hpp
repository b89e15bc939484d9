#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <unordered_map>
#include <vector>

#include "reflcat/ff/matrix.hpp"
#include "reflcat/group/matgroup.hpp"

namespace reflcat::cohomology {

using ff::Matrix;
using ff::PrimeField;
using ff::Residue;
using ff::Vec;

// A finite group given by an explicit list of matrices, acting on F_p^m.
// Element 0 is the identity.
class GModule {
 public:
  // action[i] is the matrix of elements[i] on the module. Throws
  // StructuralError for shape mismatches or a non-identity first element.
  GModule(std::vector<Matrix> elements, std::vector<Matrix> action);

  // V = F_p^dim with the group acting through its own matrices.
  static GModule natural(const group::MatGroup& g);
  static GModule trivial(const group::MatGroup& g, std::size_t module_dim);
  // Same group acting trivially on F_p^module_dim.
  GModule trivial_companion(std::size_t module_dim = 1) const;

  const PrimeField& field() const { return field_; }
  std::size_t order() const { return elements_.size(); }
  std::size_t dim() const { return dim_; }
  const Matrix& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Matrix>& elements() const { return elements_; }
  const Matrix& action(std::size_t i) const { return action_[i]; }

  // Throws StructuralError when m is not in the list.
  std::size_t index(const Matrix& m) const;
  bool contains(const Matrix& m) const { return index_.count(m) > 0; }
  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  std::size_t element_order(std::size_t a) const;

  // Submodule structure for a subgroup given by element indices; the
  // identity is moved to the front.
  GModule restrict_to(const std::vector<std::size_t>& subgroup) const;

  // action(gh) = action(g) action(h), on all pairs for small groups and on
  // random pairs otherwise.
  bool is_homomorphism(std::uint64_t seed = 0, std::size_t samples = 2000) const;

 private:
  PrimeField field_;
  std::size_t dim_;
  std::vector<Matrix> elements_;
  std::vector<Matrix> action_;
  std::unordered_map<Matrix, std::size_t, ff::MatrixHash> index_;
  std::vector<std::size_t> inverse_;
  std::vector<std::uint32_t> table_;  // full multiplication table for small groups
};

// A normalized n-cochain G^n -> F_p^m: values on tuples of non-identity
// elements, stored densely with the first argument most significant.
struct Cochain {
  std::size_t degree = 0;
  std::size_t group_order = 0;
  std::size_t module_dim = 0;
  std::vector<Residue> values;

  static Cochain zero(const GModule& m, std::size_t degree);
  // Number of stored tuples, (|G|-1)^degree.
  std::size_t tuples() const;
  // Offset of the tuple's first coordinate in values; tuple entries are
  // element indices, all nonzero.
  std::size_t offset(const std::vector<std::size_t>& tuple) const;
  // Value at an arbitrary tuple (zero when some entry is the identity).
  Vec at(const std::vector<std::size_t>& tuple) const;
  void set(const std::vector<std::size_t>& tuple, const Vec& v);
  bool is_zero() const;
};

// Bytes needed by a dense cochain of this degree, saturating.
std::uint64_t cochain_bytes(std::size_t group_order, std::size_t module_dim, std::size_t degree);

}  // namespace reflcat::cohomology
