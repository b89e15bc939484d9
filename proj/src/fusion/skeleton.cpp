#include "reflcat/fusion/skeleton.hpp"

#include <set>

#include "reflcat/error.hpp"
#include "reflcat/group/meataxe.hpp"

namespace reflcat::fusion {

MetricGroup::MetricGroup(quad::QuadraticSpace space) : space_(std::move(space)) {}

std::optional<std::uint64_t> MetricGroup::order() const { return quad::vector_count(p(), rank(), ~std::uint64_t{0}); }

CrossedSkeleton::CrossedSkeleton(MetricGroup metric, cohomology::GModule group, std::vector<Component> components)
    : metric_(std::move(metric)), group_(std::move(group)), components_(std::move(components)) {
  if (components_.size() != group_.order()) throw StructuralError("one component per group element expected");
}

std::uint64_t CrossedSkeleton::simple_count(std::size_t g) const {
  std::uint64_t n = 1;
  for (std::size_t i = components_[g].d; i < metric_.rank(); ++i) n *= metric_.p();
  return n;
}

std::uint64_t CrossedSkeleton::label_count() const {
  std::uint64_t n = 0;
  for (std::size_t g = 0; g < order(); ++g) n += simple_count(g);
  return n;
}

CrossedSkeleton skeleton(const MetricGroup& metric, const group::MatGroup& g) {
  return skeleton(metric, cohomology::GModule::natural(g));
}

CrossedSkeleton skeleton(const MetricGroup& metric, cohomology::GModule g) {
  if (g.dim() != metric.rank()) throw StructuralError("action dimension differs from the rank of A");
  if (g.field().p() != metric.p()) throw StructuralError("action and metric group over different fields");
  const Matrix id = Matrix::identity(metric.field(), metric.rank());
  std::vector<Component> comps;
  comps.reserve(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    const Matrix& t = g.action(i);
    if (!metric.space().is_isometry(t))
      throw DomainError("element " + std::to_string(i) + " does not preserve Q:\n" + t.to_string());
    Subspace im = Subspace::image(id - t);
    const std::size_t d = im.dim();
    comps.push_back({std::move(im), d});
  }
  if (comps[0].d != 0) throw StructuralError("element 0 must act trivially");
  return CrossedSkeleton(metric, std::move(g), std::move(comps));
}

namespace {

std::vector<bool> generated_by(const cohomology::GModule& g, const std::vector<std::size_t>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<std::size_t> queue{0};
  in[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (auto s : gens) {
      const std::size_t x = g.mul(queue[i], s);
      if (!in[x]) {
        in[x] = true;
        queue.push_back(x);
      }
    }
  return in;
}

}  // namespace

ReflectionCheck is_reflection_skeleton(const CrossedSkeleton& sk, bool generalized) {
  const auto& g = sk.group();
  ReflectionCheck out;
  std::set<Matrix> image;
  for (std::size_t i = 0; i < g.order(); ++i) image.insert(g.action(i));
  out.image_order = image.size();
  if (!generalized)
    for (std::size_t i = 1; i < g.order(); ++i)
      if (sk.component(i).d == 0) {
        out.witness = i;
        out.reason = "nontrivial element acts as the identity on A";
        return out;
      }
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (sk.component(i).d == 1) s.push_back(i);
  const auto in = generated_by(g, s);
  for (std::size_t i = 0; i < g.order(); ++i)
    if (!in[i]) {
      out.witness = i;
      out.reason = "element outside the subgroup generated by components of FP-dimension sqrt(p)";
      return out;
    }
  out.ok = true;
  return out;
}

bool is_irreducible_skeleton(const CrossedSkeleton& sk, std::uint64_t seed) {
  std::set<Matrix> gens;
  for (std::size_t i = 0; i < sk.order(); ++i)
    if (!sk.group().action(i).is_identity()) gens.insert(sk.group().action(i));
  return group::meataxe({gens.begin(), gens.end()}, sk.metric().rank(), sk.metric().field(), seed).irreducible;
}

}  // namespace reflcat::fusion
