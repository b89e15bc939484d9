#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reflcat/cohomology/gmodule.hpp"
#include "reflcat/ff/linalg.hpp"
#include "reflcat/group/matgroup.hpp"
#include "reflcat/quad/space.hpp"

namespace reflcat::fusion {

using ff::Matrix;
using ff::Residue;
using ff::Subspace;
using ff::Vec;

// A = F_p^m with a non-degenerate Q. Values in k^x are carried as exponents
// of a fixed primitive p-th root of unity.
class MetricGroup {
 public:
  explicit MetricGroup(quad::QuadraticSpace space);

  const quad::QuadraticSpace& space() const { return space_; }
  const ff::PrimeField& field() const { return space_.field(); }
  std::uint32_t p() const { return space_.p(); }
  std::size_t rank() const { return space_.dim(); }
  // |A| = p^rank, or nullopt on overflow.
  std::optional<std::uint64_t> order() const;
  Residue q(const Vec& x) const { return space_.q(x); }
  Residue beta(const Vec& x, const Vec& y) const { return quad::beta_exponent(space_, x, y); }

 private:
  quad::QuadraticSpace space_;
};

struct Component {
  Subspace image;  // I_g = Im(id - T_g)
  std::size_t d = 0;
};

class CrossedSkeleton {
 public:
  CrossedSkeleton(MetricGroup metric, cohomology::GModule group, std::vector<Component> components);

  const MetricGroup& metric() const { return metric_; }
  // Group elements with their action T_g on A; element 0 is e.
  const cohomology::GModule& group() const { return group_; }
  const Component& component(std::size_t g) const { return components_[g]; }
  std::size_t order() const { return group_.order(); }
  // p^(rank - d_g).
  std::uint64_t simple_count(std::size_t g) const;
  std::uint64_t label_count() const;

 private:
  MetricGroup metric_;
  cohomology::GModule group_;
  std::vector<Component> components_;
};

// Throws DomainError when some T_g is not an isometry of the metric group.
CrossedSkeleton skeleton(const MetricGroup& metric, const group::MatGroup& g);
CrossedSkeleton skeleton(const MetricGroup& metric, cohomology::GModule g);

struct ReflectionCheck {
  bool ok = false;
  // Element index of a failing element: a nontrivial element acting as the
  // identity, or an element outside the subgroup generated by S.
  std::optional<std::size_t> witness;
  std::string reason;
  // Order of the image of G in O(A, Q).
  std::uint64_t image_order = 0;
};

// (1) T_g = id only for g = e; (2) S = {g : d_g = 1} generates G.
// generalized skips (1).
ReflectionCheck is_reflection_skeleton(const CrossedSkeleton& sk, bool generalized = false);
bool is_irreducible_skeleton(const CrossedSkeleton& sk, std::uint64_t seed = 0);

}  // namespace reflcat::fusion
