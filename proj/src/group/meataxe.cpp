#include "reflcat/group/meataxe.hpp"

#include <random>

#include "reflcat/error.hpp"
#include "reflcat/ff/poly.hpp"
#include "reflcat/quad/space.hpp"

namespace reflcat::group {

Subspace spin(const ff::PrimeField& f, const std::vector<Matrix>& gens, const ff::Vec& v) {
  const std::size_t n = v.size();
  Subspace s(f, n);
  if (ff::is_zero(v)) return s;
  std::vector<ff::Vec> found{v};
  s = Subspace::span(f, n, found);
  for (std::size_t i = 0; i < found.size() && s.dim() < n; ++i)
    for (const auto& g : gens) {
      ff::Vec w = g.apply(found[i]);
      if (s.contains(w)) continue;
      found.push_back(std::move(w));
      s = Subspace::span(f, n, found);
    }
  return s;
}

namespace {

// Annihilator {x : w.x = 0 for all w in W}.
Subspace annihilator(const Subspace& w) {
  const auto& f = w.field();
  Matrix m(f, std::max<std::size_t>(w.dim(), 1), w.ambient());
  for (std::size_t i = 0; i < w.dim(); ++i)
    for (std::size_t j = 0; j < w.ambient(); ++j) m.set(i, j, w.basis()[i][j]);
  return Subspace::kernel(m);
}

std::optional<Subspace> exhaustive_invariant(const std::vector<Matrix>& gens, std::size_t dim,
                                             const ff::PrimeField& f) {
  const auto count = quad::vector_count(f.p(), dim);
  if (!count) throw ResourceError("irreducibility test did not converge and the module is too large to scan");
  for (std::uint64_t i = 1; i < *count; ++i) {
    const ff::Vec v = quad::vector_from_index(f.p(), dim, i);
    const Subspace s = spin(f, gens, v);
    if (s.dim() < dim) return s;
  }
  return std::nullopt;
}

}  // namespace

IrreducibilityResult meataxe(const std::vector<Matrix>& gens, std::size_t dim, const ff::PrimeField& f,
                             std::uint64_t seed) {
  if (dim == 0) throw StructuralError("zero-dimensional module");
  if (dim == 1) return {true, std::nullopt};
  if (gens.empty()) {
    ff::Vec e(dim, 0);
    e[0] = 1;
    return {false, Subspace::span(f, dim, {e})};
  }
  std::vector<Matrix> gens_t;
  for (const auto& g : gens) gens_t.push_back(g.transpose());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<ff::Residue> coef(0, f.p() - 1);
  std::vector<Matrix> words = gens;
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    words.push_back(words[pick(rng)] * words[pick(rng)]);
    Matrix a(f, dim, dim);
    for (const auto& w : words) a = a + w.scaled(coef(rng));
    for (const auto& fac : ff::irreducible_factors(f, ff::charpoly(a), rng)) {
      const Matrix fa = ff::evaluate(fac, a);
      const auto ker = ff::kernel_basis(fa);
      const Subspace s = spin(f, gens, ker.front());
      if (s.dim() < dim) return {false, s};
      if (static_cast<int>(ker.size()) != ff::degree(fac)) continue;
      // Norton: nullity equals the degree, so the dual test is conclusive.
      const auto ker_t = ff::kernel_basis(fa.transpose());
      const Subspace st = spin(f, gens_t, ker_t.front());
      if (st.dim() < dim) return {false, annihilator(st)};
      return {true, std::nullopt};
    }
  }
  auto inv = exhaustive_invariant(gens, dim, f);
  if (inv) return {false, inv};
  return {true, std::nullopt};
}

std::size_t endo_algebra_dim(const std::vector<Matrix>& gens, std::size_t dim, const ff::PrimeField& f) {
  const std::size_t n = dim, unknowns = n * n;
  if (gens.empty()) return unknowns;
  // Unknown X_{ij} at index i*n + j; equation (XM - MX)_{rc} = 0.
  Matrix sys(f, gens.size() * unknowns, unknowns);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const Matrix& m = gens[g];
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t row = g * unknowns + r * n + c;
        for (std::size_t k = 0; k < n; ++k) {
          sys.set(row, r * n + k, f.add(sys(row, r * n + k), m(k, c)));
          sys.set(row, k * n + c, f.sub(sys(row, k * n + c), m(r, k)));
        }
      }
  }
  return unknowns - ff::rank(sys);
}

}  // namespace reflcat::group
