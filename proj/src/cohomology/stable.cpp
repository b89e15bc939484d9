#include "reflcat/cohomology/stable.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "reflcat/cohomology/cyclic.hpp"
#include "reflcat/error.hpp"
#include "reflcat/ff/linalg.hpp"

namespace reflcat::cohomology {

std::vector<std::size_t> cyclic_subgroup(const GModule& m, std::size_t g) {
  std::vector<std::size_t> out;
  std::size_t x = 0;
  do {
    out.push_back(x);
    x = m.mul(x, g);
  } while (x != 0);
  return out;
}

bool is_subgroup(const GModule& m, const std::vector<std::size_t>& s) {
  const std::unordered_set<std::size_t> set(s.begin(), s.end());
  if (!set.count(0)) return false;
  for (auto a : s)
    for (auto b : s)
      if (!set.count(m.mul(a, m.inv(b)))) return false;
  return true;
}

bool is_normal(const GModule& m, const std::vector<std::size_t>& n) {
  if (!is_subgroup(m, n)) return false;
  const std::unordered_set<std::size_t> set(n.begin(), n.end());
  for (std::size_t g = 0; g < m.order(); ++g)
    for (auto x : n)
      if (!set.count(m.mul(m.mul(g, x), m.inv(g)))) return false;
  return true;
}

std::pair<GModule, Cochain> restriction(const GModule& m, const Cochain& f, const std::vector<std::size_t>& subgroup) {
  if (!is_subgroup(m, subgroup)) throw StructuralError("restriction target is not a subgroup");
  GModule s = m.restrict_to(subgroup);
  std::vector<std::size_t> to_parent(s.order());
  for (std::size_t i = 0; i < s.order(); ++i) to_parent[i] = m.index(s.element(i));
  Cochain r = Cochain::zero(s, f.degree);
  if (f.degree == 0) {
    r.values = f.values;
    return {std::move(s), std::move(r)};
  }
  if (s.order() == 1) return {std::move(s), std::move(r)};
  std::vector<std::size_t> t(f.degree, 1), parent(f.degree);
  for (;;) {
    for (std::size_t i = 0; i < t.size(); ++i) parent[i] = to_parent[t[i]];
    r.set(t, f.at(parent));
    std::size_t i = t.size();
    while (i > 0) {
      if (++t[i - 1] < s.order()) break;
      t[i - 1] = 1;
      --i;
    }
    if (i == 0) break;
  }
  return {std::move(s), std::move(r)};
}

std::uint64_t p_part(std::uint64_t order, std::uint32_t p) {
  std::uint64_t r = 1;
  while (order % p == 0) {
    order /= p;
    r *= p;
  }
  return r;
}

StableResult h2_stable_elements(const GModule& m) {
  const auto& f = m.field();
  const std::uint32_t p = f.p();
  StableResult res;
  res.sylow_order = p_part(m.order(), p);
  if (res.sylow_order == 1) return res;
  std::size_t sigma = 0;
  for (std::size_t g = 1; g < m.order() && !sigma; ++g)
    if (m.element_order(g) == res.sylow_order) sigma = g;
  if (!sigma) throw DomainError("the Sylow " + std::to_string(p) + "-subgroup is not cyclic");
  res.sylow_generator = sigma;
  const long ord = static_cast<long>(res.sylow_order);

  const auto s = cyclic_subgroup(m, sigma);
  std::unordered_map<std::size_t, long> exponent;
  for (std::size_t i = 0; i < s.size(); ++i) exponent[s[i]] = static_cast<long>(i);

  const std::size_t k = m.dim();
  const Matrix& act_sigma = m.action(sigma);
  const Matrix id = Matrix::identity(f, k);
  const auto fixed = ff::kernel_basis(id - act_sigma);
  auto norm_image = [&](std::size_t gen, long order) {
    Matrix n(f, k, k), pw = id;
    for (long i = 0; i < order; ++i) {
      n = n + pw;
      pw = pw * m.action(gen);
    }
    return ff::Subspace::image(n);
  };
  const auto n_sigma = norm_image(sigma, ord);

  // Unknown x: v = sum_k x_k fixed[k]. Each conjugator contributes the
  // condition res_T(alpha_v) = res_T(g . alpha_v) in H^2(T, A) = A^tau / N_tau A.
  std::vector<ff::Vec> constraints;
  for (std::size_t g = 0; g < m.order(); ++g) {
    const std::size_t gi = m.inv(g);
    auto conj = [&](std::size_t x) { return m.mul(m.mul(gi, x), g); };
    long t = 0;
    for (auto x : s)
      if (exponent.count(conj(x))) ++t;
    if (t <= 1) continue;
    ++res.conjugators_checked;
    const std::size_t tau = s[static_cast<std::size_t>(ord / t)];
    const long e_tau = exponent.at(conj(tau));
    long count = 0;
    std::size_t x = 0;
    for (long i = 0; i < t; ++i, x = m.mul(x, tau))
      if (exponent.at(conj(x)) + e_tau >= ord) ++count;
    const ff::Subspace w = norm_image(tau, t);
    const Residue c = f.reduce(count);
    std::vector<ff::Vec> cols;
    for (const auto& b : fixed) {
      const ff::Vec gb = m.action(g).apply(b);
      cols.push_back(w.reduce(ff::vec_sub(f, b, ff::vec_scale(f, gb, c))));
    }
    for (std::size_t r = 0; r < k; ++r) {
      ff::Vec row(fixed.size());
      for (std::size_t j = 0; j < fixed.size(); ++j) row[j] = cols[j][r];
      if (!ff::is_zero(row)) constraints.push_back(std::move(row));
    }
  }
  std::vector<ff::Vec> stable;
  if (fixed.empty()) return res;
  if (constraints.empty()) {
    stable = fixed;
  } else {
    Matrix sys(f, constraints.size(), fixed.size());
    for (std::size_t i = 0; i < constraints.size(); ++i)
      for (std::size_t j = 0; j < fixed.size(); ++j) sys.set(i, j, constraints[i][j]);
    for (const auto& x : ff::kernel_basis(sys)) {
      ff::Vec v(k, 0);
      for (std::size_t j = 0; j < fixed.size(); ++j) v = ff::vec_add(f, v, ff::vec_scale(f, fixed[j], x[j]));
      stable.push_back(std::move(v));
    }
  }
  const auto total = ff::Subspace::span(f, k, stable) + n_sigma;
  res.stable_vectors = ff::complement_basis(total, n_sigma);
  res.dim = res.stable_vectors.size();
  return res;
}

bool lhs_vanishing(const GModule& m, const std::vector<std::size_t>& normal_subgroup, std::size_t n,
                   std::uint64_t budget) {
  if (!is_normal(m, normal_subgroup)) throw StructuralError("lhs_vanishing needs a normal subgroup");
  const GModule nm = m.restrict_to(normal_subgroup);
  std::size_t gen = 0;
  for (std::size_t g = 1; g < nm.order() && !gen; ++g)
    if (nm.element_order(g) == nm.order()) gen = g;
  for (std::size_t i = 0; i <= n; ++i) {
    std::size_t d;
    if (nm.order() == 1)
      d = i == 0 ? nm.dim() : 0;
    else if (gen)
      d = cyclic_h_n(nm.action(gen), i, nm.order()).dim;
    else
      d = bar_h_n(nm, i, false, budget).dim;
    if (d) return false;
  }
  return true;
}

}  // namespace reflcat::cohomology
