#include "reflcat/group/matgroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <unordered_set>

#include "reflcat/error.hpp"
#include "reflcat/ff/poly.hpp"

namespace reflcat::group {

MatGroup::MatGroup(const PrimeField& f, std::size_t dim, std::vector<Matrix> generators)
    : field_(f), dim_(dim) {
  if (dim == 0) throw StructuralError("matrix group of dimension 0");
  std::uint64_t cap = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (cap > (std::uint64_t{1} << 62) / f.p())
      throw StructuralError("F_" + std::to_string(f.p()) + "^" + std::to_string(dim) +
                            " too large for vector encoding");
    cap *= f.p();
  }
  for (auto& g : generators) {
    ff::require_same_field(g.field(), f);
    if (g.rows() != dim || g.cols() != dim) throw StructuralError("generator has wrong shape");
    if (!g.invertible()) throw StructuralError("singular generator");
    if (!g.is_identity()) generators_.push_back(std::move(g));
  }
  schreier_sims();
}

MatGroup make_group(const std::vector<Matrix>& generators) {
  if (generators.empty()) throw StructuralError("make_group needs at least one generator");
  return MatGroup(generators.front().field(), generators.front().rows(), generators);
}

std::uint64_t MatGroup::encode(const Vec& v) const {
  std::uint64_t code = 0;
  for (std::size_t i = dim_; i-- > 0;) code = code * field_.p() + v[i];
  return code;
}

void MatGroup::add_strong_generator(std::size_t level, const Matrix& g) {
  Level& l = levels_[level];
  l.gens.push_back(g);
  l.gens_inv.push_back(g.inverse());
  l.checked.emplace_back();
  extend_orbit(level);
}

void MatGroup::extend_orbit(std::size_t level) {
  Level& l = levels_[level];
  // Existing points are already closed under every generator but the newest.
  const std::size_t newest = l.gens.size() - 1;
  const std::size_t old = l.orbit.size();
  for (std::size_t a = 0; a < l.orbit.size(); ++a) {
    for (std::size_t gi = (a < old ? newest : 0); gi < l.gens.size(); ++gi) {
      Matrix ug = l.gens[gi] * l.u[a];
      const std::uint64_t code = encode(ug.column(level));
      if (l.pos.count(code)) continue;
      l.pos.emplace(code, l.orbit.size());
      l.orbit.push_back(code);
      l.u_inv.push_back(l.u_inv[a] * l.gens_inv[gi]);
      l.u.push_back(std::move(ug));
    }
  }
}

std::pair<Matrix, std::size_t> MatGroup::strip(Matrix g, std::size_t from) const {
  for (std::size_t i = from; i < dim_; ++i) {
    const auto it = levels_[i].pos.find(encode(g.column(i)));
    if (it == levels_[i].pos.end()) return {std::move(g), i};
    g = levels_[i].u_inv[it->second] * g;
  }
  return {std::move(g), dim_};
}

void MatGroup::schreier_sims() {
  levels_.assign(dim_, Level{});
  for (std::size_t i = 0; i < dim_; ++i) {
    Vec e(dim_, 0);
    e[i] = 1;
    Level& l = levels_[i];
    l.pos.emplace(encode(e), 0);
    l.orbit.push_back(encode(e));
    l.base = std::move(e);
    l.u.push_back(Matrix::identity(field_, dim_));
    l.u_inv.push_back(Matrix::identity(field_, dim_));
  }
  for (const auto& g : generators_) {
    auto [r, j] = strip(g);
    if (j == dim_) continue;
    for (std::size_t l = 0; l <= j; ++l) add_strong_generator(l, r);
  }
  int i = static_cast<int>(dim_) - 1;
  while (i >= 0) {
    Level& l = levels_[i];
    bool restarted = false;
    for (std::size_t s = 0; s < l.gens.size() && !restarted; ++s) {
      for (std::size_t a = 0; a < l.orbit.size(); ++a) {
        auto& flags = l.checked[s];
        if (flags.size() < l.orbit.size()) flags.resize(l.orbit.size(), 0);
        if (flags[a]) continue;
        flags[a] = 1;
        const Matrix su = l.gens[s] * l.u[a];
        const std::size_t b = l.pos.at(encode(su.column(i)));
        const Matrix h = l.u_inv[b] * su;
        if (h.is_identity()) continue;
        auto [r, j] = strip(h, static_cast<std::size_t>(i) + 1);
        if (j == dim_) {
          if (!r.is_identity()) throw InvariantViolation("residue fixes a basis but is not the identity");
          continue;
        }
        for (std::size_t t = static_cast<std::size_t>(i) + 1; t <= j; ++t) add_strong_generator(t, r);
        i = static_cast<int>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

std::uint64_t MatGroup::order() const {
  unsigned __int128 n = 1;
  for (const auto& l : levels_) {
    n *= l.orbit.size();
    if (n > UINT64_MAX) throw ResourceError("group order exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(n);
}

std::vector<std::size_t> MatGroup::orbit_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& l : levels_) out.push_back(l.orbit.size());
  return out;
}

bool MatGroup::contains(const Matrix& m) const {
  if (m.rows() != dim_ || m.cols() != dim_) throw StructuralError("matrix has wrong shape for group");
  ff::require_same_field(m.field(), field_);
  if (!m.invertible()) return false;
  auto [r, j] = strip(m);
  return j == dim_ && r.is_identity();
}

Matrix MatGroup::random_element(std::mt19937_64& rng) const {
  Matrix g = Matrix::identity(field_, dim_);
  for (const auto& l : levels_) {
    std::uniform_int_distribution<std::size_t> pick(0, l.orbit.size() - 1);
    g = g * l.u[pick(rng)];
  }
  return g;
}

void MatGroup::for_each_element(const std::function<void(const Matrix&)>& fn, std::uint64_t limit) const {
  if (order() > limit)
    throw ResourceError("refusing to enumerate " + std::to_string(order()) + " elements (limit " +
                        std::to_string(limit) + ")");
  std::function<void(std::size_t, const Matrix&)> rec = [&](std::size_t level, const Matrix& prefix) {
    if (level == dim_) {
      fn(prefix);
      return;
    }
    for (const auto& u : levels_[level].u) rec(level + 1, prefix * u);
  };
  rec(0, Matrix::identity(field_, dim_));
}

std::vector<Matrix> MatGroup::elements(std::uint64_t limit) const {
  std::vector<Matrix> out;
  for_each_element([&](const Matrix& m) { out.push_back(m); }, limit);
  return out;
}

MatGroup MatGroup::with_generator(const Matrix& g) const {
  std::vector<Matrix> gens = generators_;
  gens.push_back(g);
  return MatGroup(field_, dim_, std::move(gens));
}

std::vector<Matrix> closure(const std::vector<Matrix>& generators, std::size_t limit) {
  if (generators.empty()) throw StructuralError("closure needs at least one generator");
  const auto& f = generators.front().field();
  const std::size_t n = generators.front().rows();
  std::unordered_set<Matrix, ff::MatrixHash> seen;
  std::vector<Matrix> out{Matrix::identity(f, n)};
  seen.insert(out.front());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : generators) {
      Matrix h = out[i] * g;
      if (seen.insert(h).second) {
        out.push_back(std::move(h));
        if (out.size() > limit) throw ResourceError("closure exceeded " + std::to_string(limit) + " elements");
      }
    }
  }
  return out;
}

MatGroup normal_closure(const MatGroup& g, const std::vector<Matrix>& elements) {
  MatGroup h(g.field(), g.dim(), elements);
  bool changed = true;
  while (changed) {
    changed = false;
    const auto hgens = h.generators();
    for (const auto& x : hgens) {
      for (const auto& y : g.generators()) {
        const Matrix c = y.inverse() * x * y;
        if (!h.contains(c)) {
          h = h.with_generator(c);
          changed = true;
        }
      }
    }
  }
  return h;
}

MatGroup derived_subgroup(const MatGroup& g) {
  std::vector<Matrix> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Matrix c = gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j];
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure(g, comms);
}

bool is_normal_subgroup(const MatGroup& g, const MatGroup& n) {
  for (const auto& x : n.generators()) {
    if (!g.contains(x)) return false;
    for (const auto& y : g.generators())
      if (!n.contains(y.inverse() * x * y)) return false;
  }
  return true;
}

bool center_contains_minus_id(const MatGroup& g) {
  return g.contains(Matrix::scalar(g.field(), g.dim(), g.field().neg(1)));
}

std::optional<Matrix> element_of_order(const MatGroup& g, std::uint64_t k, std::uint64_t seed, int attempts) {
  if (k == 0) return std::nullopt;
  if (k == 1) return Matrix::identity(g.field(), g.dim());
  const std::uint64_t n = g.order();
  if (n % k) return std::nullopt;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < attempts; ++t) {
    const Matrix x = g.random_element(rng);
    const std::uint64_t m = x.order(n);
    if (m && m % k == 0) return x.pow(m / k);
  }
  return std::nullopt;
}

std::vector<std::pair<std::vector<std::uint64_t>, std::uint64_t>> class_fingerprint(const MatGroup& g) {
  std::map<std::vector<std::uint64_t>, std::uint64_t> hist;
  const std::uint64_t n = g.order();
  g.for_each_element([&](const Matrix& x) {
    std::vector<std::uint64_t> key{x.order(n)};
    for (auto c : ff::charpoly(x)) key.push_back(c);
    ++hist[key];
  });
  return {hist.begin(), hist.end()};
}

}  // namespace reflcat::group
