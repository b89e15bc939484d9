#include "reflcat/cohomology/cyclic.hpp"

#include "reflcat/error.hpp"
#include "reflcat/ff/linalg.hpp"

namespace reflcat::cohomology {

CyclicResult cyclic_h_n(const Matrix& sigma, std::size_t n, std::uint64_t group_order, std::uint64_t order_limit) {
  if (!sigma.square()) throw StructuralError("sigma must be square");
  const std::uint64_t own = sigma.order(order_limit);
  if (own == 0) throw DomainError("sigma has no finite order up to " + std::to_string(order_limit));
  if (group_order && group_order % own) throw DomainError("sigma^m is not the identity");
  const std::uint64_t m = group_order ? group_order : own;
  const auto& f = sigma.field();
  const std::size_t k = sigma.rows();
  const Matrix one = Matrix::identity(f, k);
  const Matrix delta = one - sigma;
  Matrix norm(f, k, k), power = one;
  for (std::uint64_t i = 0; i < m; ++i) {
    norm = norm + power;
    power = power * sigma;
  }
  CyclicResult r;
  r.degree = n;
  r.order = m;
  ff::Subspace top(f, k), bottom(f, k);
  if (n == 0) {
    top = ff::Subspace::kernel(delta);
  } else if (n % 2) {
    top = ff::Subspace::kernel(norm);
    bottom = ff::Subspace::image(delta);
  } else {
    top = ff::Subspace::kernel(delta);
    bottom = ff::Subspace::image(norm);
  }
  r.representatives = ff::complement_basis(top, bottom);
  r.dim = r.representatives.size();
  return r;
}

GModule cyclic_module(const Matrix& g, const Matrix& action) {
  std::vector<Matrix> els{Matrix::identity(g.field(), g.rows())};
  std::vector<Matrix> act{Matrix::identity(action.field(), action.rows())};
  for (Matrix x = g, a = action; !x.is_identity(); x = x * g, a = a * action) {
    els.push_back(x);
    act.push_back(a);
  }
  if (!(act.back() * action).is_identity()) throw DomainError("action order does not divide the group order");
  return GModule(std::move(els), std::move(act));
}

namespace {

// exponent[i] with element i = gen^exponent[i]; entries outside <gen> are -1.
std::vector<long> exponents(const GModule& m, std::size_t gen) {
  std::vector<long> e(m.order(), -1);
  std::size_t x = 0;
  long k = 0;
  do {
    e[x] = k++;
    x = m.mul(x, gen);
  } while (x != 0);
  return e;
}

}  // namespace

Cochain cyclic_cocycle(const GModule& m, std::size_t gen, const Vec& v) {
  const auto e = exponents(m, gen);
  const long ord = static_cast<long>(m.element_order(gen));
  if (static_cast<std::size_t>(ord) != m.order()) throw StructuralError("module group is not generated by gen");
  Cochain c = Cochain::zero(m, 2);
  for (std::size_t a = 1; a < m.order(); ++a)
    for (std::size_t b = 1; b < m.order(); ++b)
      if (e[a] + e[b] >= ord) c.set({a, b}, v);
  return c;
}

Vec cyclic_class_invariant(const GModule& m, std::size_t gen, const Cochain& f) {
  Vec acc(m.dim(), 0);
  std::size_t x = 0;
  do {
    acc = ff::vec_add(m.field(), acc, f.at({x, gen}));
    x = m.mul(x, gen);
  } while (x != 0);
  return acc;
}

}  // namespace reflcat::cohomology
