#include "reflcat/cohomology/bar.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "reflcat/error.hpp"
#include "reflcat/ff/linalg.hpp"
#include "reflcat/ff/sparse.hpp"

namespace reflcat::cohomology {

using ff::SparseEliminator;
using ff::SparseEntry;
using ff::SparseRow;

namespace {

// Calls fn for every tuple of non-identity element indices of length n.
void for_each_tuple(std::size_t order, std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> t(n, 1);
  if (order < 2 && n > 0) return;
  for (;;) {
    fn(t);
    std::size_t i = n;
    while (i > 0) {
      if (++t[i - 1] < order) break;
      t[i - 1] = 1;
      --i;
    }
    if (i == 0) return;
  }
}

// Row (t, r) of d^n as a sparse row over the coordinates of C^n.
SparseRow differential_row(const GModule& m, const Cochain& shape, const std::vector<std::size_t>& t, std::size_t r) {
  const auto& f = m.field();
  const std::size_t n = t.size() - 1, dim = m.dim();
  SparseRow row;
  std::vector<std::size_t> sub(t.begin() + 1, t.end());
  const std::size_t o0 = shape.offset(sub);
  const Matrix& a = m.action(t[0]);
  for (std::size_t c = 0; c < dim; ++c)
    if (a(r, c)) row.push_back({static_cast<std::uint32_t>(o0 + c), a(r, c)});
  std::vector<std::size_t> merged(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t prod = m.mul(t[i - 1], t[i]);
    if (prod == 0) continue;
    for (std::size_t j = 0, k = 0; j <= n; ++j) {
      if (j == i) continue;
      merged[k++] = j == i - 1 ? prod : t[j];
    }
    row.push_back({static_cast<std::uint32_t>(shape.offset(merged) + r), i % 2 ? f.neg(1) : Residue{1}});
  }
  std::vector<std::size_t> head(t.begin(), t.end() - 1);
  row.push_back({static_cast<std::uint32_t>(shape.offset(head) + r), (n + 1) % 2 ? f.neg(1) : Residue{1}});
  return ff::normalize_row(f, std::move(row));
}

Cochain shape_of(const GModule& m, std::size_t degree) {
  Cochain c{degree, m.order(), m.dim(), {}};
  return c;
}

std::size_t rank_of_differential(const GModule& m, std::size_t n, std::uint64_t budget,
                                 SparseEliminator* keep = nullptr) {
  const Cochain shape = shape_of(m, n);
  const std::size_t cols = shape.tuples() * m.dim();
  SparseEliminator local(m.field(), cols, budget);
  SparseEliminator& e = keep ? *keep : local;
  bool full = false;
  for_each_tuple(m.order(), n + 1, [&](const std::vector<std::size_t>& t) {
    if (full) return;
    for (std::size_t r = 0; r < m.dim() && !full; ++r) {
      e.add_row(differential_row(m, shape, t, r));
      full = e.rank() == cols;
    }
  });
  return e.rank();
}

}  // namespace

Cochain differential(const GModule& m, const Cochain& f) {
  if (f.group_order != m.order() || f.module_dim != m.dim()) throw StructuralError("cochain does not match module");
  const auto& fld = m.field();
  Cochain out = Cochain::zero(m, f.degree + 1);
  const Cochain shape = shape_of(m, f.degree);
  std::size_t pos = 0;
  for_each_tuple(m.order(), f.degree + 1, [&](const std::vector<std::size_t>& t) {
    for (std::size_t r = 0; r < m.dim(); ++r, ++pos) {
      std::uint64_t acc = 0;
      for (const auto& e : differential_row(m, shape, t, r)) acc += std::uint64_t{e.val} * f.values[e.col];
      out.values[pos] = static_cast<Residue>(acc % fld.p());
    }
  });
  return out;
}

bool is_cocycle(const GModule& m, const Cochain& f) { return differential(m, f).is_zero(); }

std::uint64_t bar_memory_estimate(std::size_t group_order, std::size_t module_dim, std::size_t n) {
  // Rows of d^n times at most (n+2) blocks of module_dim entries each.
  const std::uint64_t rows = cochain_bytes(group_order, module_dim, n + 1) / sizeof(Residue);
  const unsigned __int128 total = static_cast<unsigned __int128>(rows) * (n + 2) * module_dim * sizeof(SparseEntry);
  return total > ~std::uint64_t{0} ? ~std::uint64_t{0} : static_cast<std::uint64_t>(total);
}

CohomologyResult bar_h_n(const GModule& m, std::size_t n, bool representatives, std::uint64_t budget) {
  CohomologyResult res;
  res.degree = n;
  res.method = "bar";
  res.estimated_bytes = bar_memory_estimate(m.order(), m.dim(), n);
  if (budget && res.estimated_bytes > budget)
    throw ResourceError("bar complex for H^" + std::to_string(n) + " of a group of order " +
                        std::to_string(m.order()) + " on a module of dim " + std::to_string(m.dim()) + " needs about " +
                        std::to_string(res.estimated_bytes) + " bytes, budget " + std::to_string(budget));
  const std::size_t cols = Cochain::zero(m, n).values.size();
  SparseEliminator e(m.field(), cols, budget);
  const std::size_t rank_n = rank_of_differential(m, n, budget, &e);
  const std::size_t rank_prev = n == 0 ? 0 : rank_of_differential(m, n - 1, budget);
  res.dim = cols - rank_n - rank_prev;
  if (!representatives || res.dim == 0) return res;

  const auto z = e.nullspace();
  std::vector<ff::Vec> b;
  if (n > 0) {
    Cochain unit = Cochain::zero(m, n - 1);
    for (std::size_t j = 0; j < unit.values.size(); ++j) {
      unit.values[j] = 1;
      b.push_back(differential(m, unit).values);
      unit.values[j] = 0;
    }
  }
  const auto zs = ff::Subspace::span(m.field(), cols, z);
  const auto bs = ff::Subspace::span(m.field(), cols, b);
  for (auto& v : ff::complement_basis(zs, bs)) {
    Cochain c = Cochain::zero(m, n);
    c.values = std::move(v);
    res.representatives.push_back(std::move(c));
  }
  if (res.representatives.size() != res.dim) throw InvariantViolation("bar complex representatives disagree with rank count");
  return res;
}

bool is_coboundary(const GModule& m, const Cochain& c, std::uint64_t budget) {
  if (c.degree == 0) throw DomainError("degree-0 cochains are never coboundaries");
  if (!is_cocycle(m, c)) throw DomainError("not a cocycle");
  const Cochain shape = shape_of(m, c.degree - 1);
  const std::size_t cols = shape.tuples() * m.dim();
  // Rows of [d | c]: the system d h = c is inconsistent iff (0,..,0,1) is in
  // the row space.
  SparseEliminator e(m.field(), cols + 1, budget);
  std::size_t pos = 0;
  for_each_tuple(m.order(), c.degree, [&](const std::vector<std::size_t>& t) {
    for (std::size_t r = 0; r < m.dim(); ++r, ++pos) {
      SparseRow row = differential_row(m, shape, t, r);
      if (c.values[pos]) row.push_back({static_cast<std::uint32_t>(cols), c.values[pos]});
      e.add_row(row);
    }
  });
  return !e.in_span({{static_cast<std::uint32_t>(cols), 1}});
}

}  // namespace reflcat::cohomology
