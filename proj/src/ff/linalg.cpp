#include "reflcat/ff/linalg.hpp"

#include "reflcat/error.hpp"
#include "reflcat/ff/kernels.hpp"

namespace reflcat::ff {

Rref rref(const Matrix& m) {
  Rref out{m, 0, {}};
  Matrix& a = out.reduced;
  const auto& f = m.field();
  const std::uint32_t p = f.p();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) {
      auto x = a.row(piv), y = a.row(r);
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(x[j], y[j]);
    }
    kernels::scale_mod(a.row(r), f.inv(a(r, c)), p);
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (i != r && a(i, c)) kernels::axpy_mod(a.row(i), a.row(r), f.neg(a(i, c)), p);
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vec> kernel_basis(const Matrix& m) {
  const Rref r = rref(m);
  const auto& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = f.neg(r.reduced(i, free));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> image_basis(const Matrix& m) {
  std::vector<Vec> out;
  for (auto c : rref(m).pivots) out.push_back(m.column(c));
  return out;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw StructuralError("right-hand side length does not match matrix rows");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.set(i, j, m(i, j));
    aug.set(i, m.cols(), b[i] % m.field().p());
  }
  const Rref r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols(), 0);
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.reduced(i, m.cols());
  return x;
}

Subspace::Subspace(const PrimeField& f, std::size_t ambient) : field_(f), ambient_(ambient) {}

Subspace Subspace::span(const PrimeField& f, std::size_t ambient, const std::vector<Vec>& vectors) {
  Subspace s(f, ambient);
  if (vectors.empty()) return s;
  Matrix m(f, vectors.size(), ambient);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient) throw StructuralError("spanning vector has wrong length");
    for (std::size_t j = 0; j < ambient; ++j) m.set(i, j, vectors[i][j] % f.p());
  }
  const Rref r = rref(m);
  for (std::size_t i = 0; i < r.rank; ++i) {
    auto row = r.reduced.row(i);
    s.basis_.emplace_back(row.begin(), row.end());
  }
  s.pivots_ = r.pivots;
  return s;
}

Subspace Subspace::whole(const PrimeField& f, std::size_t ambient) {
  std::vector<Vec> e;
  for (std::size_t i = 0; i < ambient; ++i) {
    Vec v(ambient, 0);
    v[i] = 1;
    e.push_back(std::move(v));
  }
  return span(f, ambient, e);
}

Subspace Subspace::image(const Matrix& m) {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return span(m.field(), m.rows(), cols);
}

Subspace Subspace::kernel(const Matrix& m) { return span(m.field(), m.cols(), kernel_basis(m)); }

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw StructuralError("vector length does not match subspace ambient");
  Vec out(v);
  for (auto& x : out) x %= field_.p();
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Residue c = out[pivots_[i]];
    if (c) kernels::axpy_mod(out, basis_[i], field_.neg(c), field_.p());
  }
  return out;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

Subspace Subspace::operator+(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw StructuralError("sum of subspaces of different ambients");
  std::vector<Vec> all = basis_;
  all.insert(all.end(), o.basis_.begin(), o.basis_.end());
  return span(field_, ambient_, all);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw StructuralError("intersection of subspaces of different ambients");
  if (basis_.empty() || o.basis_.empty()) return Subspace(field_, ambient_);
  // Solve sum a_i u_i = sum b_j w_j.
  const std::size_t k = basis_.size(), l = o.basis_.size();
  Matrix m(field_, ambient_, k + l);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < ambient_; ++i) m.set(i, j, basis_[j][i]);
  for (std::size_t j = 0; j < l; ++j)
    for (std::size_t i = 0; i < ambient_; ++i) m.set(i, k + j, field_.neg(o.basis_[j][i]));
  std::vector<Vec> vs;
  for (const auto& x : kernel_basis(m)) {
    Vec v(ambient_, 0);
    for (std::size_t j = 0; j < k; ++j)
      if (x[j]) kernels::axpy_mod(v, basis_[j], x[j], field_.p());
    vs.push_back(std::move(v));
  }
  return span(field_, ambient_, vs);
}

Subspace Subspace::mapped(const Matrix& m) const {
  if (m.cols() != ambient_) throw StructuralError("matrix does not act on subspace ambient");
  std::vector<Vec> vs;
  for (const auto& b : basis_) vs.push_back(m.apply(b));
  return span(field_, m.rows(), vs);
}

bool Subspace::invariant_under(const Matrix& m) const {
  for (const auto& b : basis_)
    if (!contains(m.apply(b))) return false;
  return true;
}

std::vector<Vec> complement_basis(const Subspace& u, const Subspace& w) {
  std::vector<Vec> out;
  Subspace acc = w;
  for (const auto& b : u.basis()) {
    if (acc.contains(b)) continue;
    out.push_back(b);
    acc = acc + Subspace::span(u.field(), u.ambient(), {b});
  }
  return out;
}

}  // namespace reflcat::ff
