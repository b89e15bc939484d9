#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "reflcat/ff/matrix.hpp"

namespace reflcat::group {

using ff::Matrix;
using ff::PrimeField;
using ff::Residue;
using ff::Vec;

// Element enumeration (elements(), for_each_element) refuses larger groups.
inline constexpr std::uint64_t kEnumerationLimit = 10000000;

// A matrix group over F_p with a stabilizer chain for its action on column
// vectors. Base points are the standard basis vectors e_1, e_2, ... in order;
// a level whose orbit is trivial costs nothing.
class MatGroup {
 public:
  // Throws StructuralError for singular or mis-shaped generators.
  MatGroup(const PrimeField& f, std::size_t dim, std::vector<Matrix> generators);

  const PrimeField& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Matrix>& generators() const { return generators_; }

  std::uint64_t order() const;
  bool contains(const Matrix& m) const;
  // Uniformly distributed element.
  Matrix random_element(std::mt19937_64& rng) const;
  std::vector<std::size_t> orbit_sizes() const;

  // Visits every element; ResourceError above limit.
  void for_each_element(const std::function<void(const Matrix&)>& fn,
                        std::uint64_t limit = kEnumerationLimit) const;
  std::vector<Matrix> elements(std::uint64_t limit = kEnumerationLimit) const;

  // The group generated by these generators plus g.
  MatGroup with_generator(const Matrix& g) const;

 private:
  struct Level {
    Vec base;
    std::vector<Matrix> gens;
    std::vector<Matrix> gens_inv;
    std::vector<std::uint64_t> orbit;
    std::unordered_map<std::uint64_t, std::size_t> pos;
    std::vector<Matrix> u;
    std::vector<Matrix> u_inv;
    std::vector<std::vector<char>> checked;  // [gen][orbit index]
  };

  std::uint64_t encode(const Vec& v) const;
  void add_strong_generator(std::size_t level, const Matrix& g);
  void extend_orbit(std::size_t level);
  // Returns the residue and the level where sifting stopped (dim_ when the
  // residue fixes every base point).
  std::pair<Matrix, std::size_t> strip(Matrix g, std::size_t from = 0) const;
  void schreier_sims();

  PrimeField field_;
  std::size_t dim_;
  std::vector<Matrix> generators_;
  std::vector<Level> levels_;
};

// Field and dimension taken from the first generator, which must exist.
MatGroup make_group(const std::vector<Matrix>& generators);

// Breadth-first closure of the generators; independent of the chain code.
// ResourceError once more than limit elements appear.
std::vector<Matrix> closure(const std::vector<Matrix>& generators, std::size_t limit = 1000000);

MatGroup derived_subgroup(const MatGroup& g);
// Normal closure of the given elements in g.
MatGroup normal_closure(const MatGroup& g, const std::vector<Matrix>& elements);
bool is_normal_subgroup(const MatGroup& g, const MatGroup& n);
bool center_contains_minus_id(const MatGroup& g);

// Element of exact order k from seeded random sampling and powering.
std::optional<Matrix> element_of_order(const MatGroup& g, std::uint64_t k, std::uint64_t seed = 0,
                                       int attempts = 400);

// GL-conjugacy invariant: histogram of (element order, characteristic
// polynomial) over all elements, sorted.
std::vector<std::pair<std::vector<std::uint64_t>, std::uint64_t>> class_fingerprint(const MatGroup& g);

}  // namespace reflcat::group
