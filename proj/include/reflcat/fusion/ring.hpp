#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "reflcat/fusion/skeleton.hpp"

namespace reflcat::fusion {

struct Label {
  std::size_t g = 0;
  Vec coset;  // representative reduced modulo I_g
};

struct Term {
  std::size_t label = 0;
  std::uint64_t mult = 0;
};

// Labels are ordered component-major, then by coset representative.
class FusionRing {
 public:
  static constexpr std::uint64_t kDefaultLabelLimit = 100000;

  explicit FusionRing(CrossedSkeleton sk, std::uint64_t label_limit = kDefaultLabelLimit);

  const CrossedSkeleton& skeleton() const { return sk_; }
  std::size_t size() const { return labels_.size(); }
  const Label& label(std::size_t i) const { return labels_[i]; }
  std::string label_name(std::size_t i) const;
  std::size_t unit() const { return 0; }
  std::size_t component_begin(std::size_t g) const { return begin_[g]; }
  std::size_t component_end(std::size_t g) const { return begin_[g + 1]; }
  // Index of the label (g, v + I_g).
  std::size_t find(std::size_t g, const Vec& v) const;

  // x * y as a list of labels with multiplicity, sorted by label.
  std::vector<Term> product(std::size_t x, std::size_t y) const;
  std::uint64_t multiplicity(std::size_t x, std::size_t y, std::size_t w) const;
  // FPdim(x)^2 = p^(d_g).
  std::uint64_t fp_dim_squared(std::size_t x) const;
  // The label (g^-1, -T_g^-1 v).
  std::size_t dual(std::size_t x) const;

 private:
  struct PairData {
    std::vector<Vec> complement;  // basis of (I_g + T_g I_h) / I_gh
    std::uint64_t mult = 0;
  };
  const PairData& pair_data(std::size_t g, std::size_t h) const;

  CrossedSkeleton sk_;
  std::vector<Label> labels_;
  std::vector<std::size_t> begin_;
  std::vector<std::vector<std::size_t>> free_;  // non-pivot coordinates per component
  mutable std::unordered_map<std::uint64_t, PairData> pairs_;
};

FusionRing fusion_ring(const CrossedSkeleton& sk, std::uint64_t label_limit = FusionRing::kDefaultLabelLimit);

enum class AxiomStatus { pass, fail, skipped };

struct AxiomResult {
  std::string name;
  AxiomStatus status = AxiomStatus::skipped;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomResult> results;
  bool passed() const;
};

std::string_view to_string(AxiomStatus s);

// Unit, grading, FP-dimension homomorphism and duality on all pairs;
// associativity on all triples when the ring has at most
// associativity_limit labels.
AxiomReport check_axioms(const FusionRing& r, std::size_t associativity_limit = 200);

// For A = F_p and G = {1, -1}: (e,a)(e,b) = (e,a+b), (e,a)X = X(e,a) = X,
// X X = sum over a of (e,a).
bool matches_tambara_yamagami(const FusionRing& r);

}  // namespace reflcat::fusion
