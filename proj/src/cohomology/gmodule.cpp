#include "reflcat/cohomology/gmodule.hpp"

#include <algorithm>
#include <string>

#include "reflcat/error.hpp"

namespace reflcat::cohomology {

namespace {

constexpr std::size_t kTableLimit = 2048;

}  // namespace

GModule::GModule(std::vector<Matrix> elements, std::vector<Matrix> action)
    : field_(elements.empty() ? throw StructuralError("empty group") : elements.front().field()),
      dim_(action.empty() ? 0 : action.front().rows()),
      elements_(std::move(elements)),
      action_(std::move(action)) {
  if (elements_.size() != action_.size()) throw StructuralError("one action matrix per element required");
  if (!elements_.front().is_identity()) throw StructuralError("element 0 must be the identity");
  if (dim_ == 0) throw StructuralError("zero-dimensional module");
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto& a = action_[i];
    if (a.rows() != dim_ || a.cols() != dim_ || !(a.field() == field_))
      throw StructuralError("action matrices must be square of the module dimension");
    if (!index_.emplace(elements_[i], i).second) throw StructuralError("repeated group element");
  }
  const std::size_t n = elements_.size();
  if (n <= kTableLimit) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        auto it = index_.find(elements_[a] * elements_[b]);
        if (it == index_.end()) throw StructuralError("element list is not closed under multiplication");
        table_[a * n + b] = static_cast<std::uint32_t>(it->second);
      }
  }
  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    auto it = index_.find(elements_[a].inverse());
    if (it == index_.end()) throw StructuralError("element list is not closed under inverses");
    inverse_[a] = it->second;
  }
}

GModule GModule::natural(const group::MatGroup& g) {
  auto els = g.elements();
  auto id = std::find_if(els.begin(), els.end(), [](const Matrix& m) { return m.is_identity(); });
  std::iter_swap(els.begin(), id);
  auto act = els;
  return GModule(std::move(els), std::move(act));
}

GModule GModule::trivial(const group::MatGroup& g, std::size_t module_dim) {
  return natural(g).trivial_companion(module_dim);
}

GModule GModule::trivial_companion(std::size_t module_dim) const {
  return GModule(elements_, std::vector<Matrix>(elements_.size(), Matrix::identity(field_, module_dim)));
}

std::size_t GModule::index(const Matrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw StructuralError("matrix is not an element of the group");
  return it->second;
}

std::size_t GModule::mul(std::size_t a, std::size_t b) const {
  if (!table_.empty()) return table_[a * elements_.size() + b];
  return index(elements_[a] * elements_[b]);
}

std::size_t GModule::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

GModule GModule::restrict_to(const std::vector<std::size_t>& subgroup) const {
  std::vector<std::size_t> idx = subgroup;
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  if (idx.empty() || idx.front() != 0) throw StructuralError("subgroup must contain the identity");
  std::vector<Matrix> els, act;
  for (auto i : idx) {
    if (i >= order()) throw StructuralError("subgroup index out of range");
    els.push_back(elements_[i]);
    act.push_back(action_[i]);
  }
  return GModule(std::move(els), std::move(act));
}

bool GModule::is_homomorphism(std::uint64_t seed, std::size_t samples) const {
  const std::size_t n = order();
  auto check = [&](std::size_t a, std::size_t b) { return action_[mul(a, b)] == action_[a] * action_[b]; };
  if (n * n <= samples) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (!check(a, b)) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t i = 0; i < samples; ++i)
    if (!check(pick(rng), pick(rng))) return false;
  return true;
}

Cochain Cochain::zero(const GModule& m, std::size_t degree) {
  Cochain c{degree, m.order(), m.dim(), {}};
  const auto bytes = cochain_bytes(m.order(), m.dim(), degree);
  if (bytes > (std::uint64_t{1} << 34)) throw ResourceError("cochain would need " + std::to_string(bytes) + " bytes");
  c.values.assign(c.tuples() * m.dim(), 0);
  return c;
}

std::size_t Cochain::tuples() const {
  std::size_t t = 1;
  for (std::size_t i = 0; i < degree; ++i) t *= group_order - 1;
  return t;
}

std::size_t Cochain::offset(const std::vector<std::size_t>& tuple) const {
  std::size_t idx = 0;
  for (auto g : tuple) idx = idx * (group_order - 1) + (g - 1);
  return idx * module_dim;
}

Vec Cochain::at(const std::vector<std::size_t>& tuple) const {
  if (tuple.size() != degree) throw StructuralError("cochain evaluated at a tuple of the wrong length");
  for (auto g : tuple)
    if (g == 0) return Vec(module_dim, 0);
  const std::size_t o = offset(tuple);
  return Vec(values.begin() + o, values.begin() + o + module_dim);
}

void Cochain::set(const std::vector<std::size_t>& tuple, const Vec& v) {
  for (auto g : tuple)
    if (g == 0) throw StructuralError("normalized cochains vanish on the identity");
  std::copy(v.begin(), v.end(), values.begin() + offset(tuple));
}

bool Cochain::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](Residue x) { return x == 0; });
}

std::uint64_t cochain_bytes(std::size_t group_order, std::size_t module_dim, std::size_t degree) {
  unsigned __int128 b = module_dim * sizeof(Residue);
  for (std::size_t i = 0; i < degree; ++i) {
    b *= group_order > 0 ? group_order - 1 : 0;
    if (b > ~std::uint64_t{0}) return ~std::uint64_t{0};
  }
  return static_cast<std::uint64_t>(b);
}

}  // namespace reflcat::cohomology
