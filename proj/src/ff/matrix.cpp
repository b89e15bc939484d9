#include "reflcat/ff/matrix.hpp"

#include <sstream>

#include "reflcat/error.hpp"
#include "reflcat/ff/kernels.hpp"

namespace reflcat::ff {

void require_same_field(const PrimeField& a, const PrimeField& b) {
  if (!(a == b))
    throw StructuralError("mixed moduli: " + std::to_string(a.p()) + " vs " + std::to_string(b.p()));
}

Matrix::Matrix(const PrimeField& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(const PrimeField& f, std::size_t n) { return scalar(f, n, 1); }

Matrix Matrix::scalar(const PrimeField& f, std::size_t n, Residue c) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, c % f.p());
  return m;
}

Matrix Matrix::from_rows(const PrimeField& f, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Matrix m(f, rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw StructuralError("ragged matrix rows");
    for (std::size_t j = 0; j < nc; ++j) m.set(i, j, f.reduce(rows[i][j]));
  }
  return m;
}

Matrix Matrix::from_rows(const PrimeField& f, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<std::int64_t>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(f, v);
}

Matrix Matrix::from_columns(const PrimeField& f, std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw StructuralError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
  }
  return m;
}

Matrix Matrix::diagonal(const PrimeField& f, const Vec& diag) {
  Matrix m(f, diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.set(i, i, diag[i] % f.p());
  return m;
}

Matrix Matrix::block_diagonal(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_);
  Matrix m(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) m.set(i, j, a(i, j));
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) m.set(a.rows_ + i, a.cols_ + j, b(i, j));
  return m;
}

Vec Matrix::column(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same_field(field_, o.field_);
  if (cols_ != o.rows_)
    throw StructuralError("product of " + std::to_string(rows_) + "x" + std::to_string(cols_) + " and " +
                          std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  Matrix m(field_, rows_, o.cols_);
  const std::uint32_t p = field_.p();
  if (o.cols_ >= 16) {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) kernels::axpy_mod(m.row(i), o.row(k), (*this)(i, k), p);
    return m;
  }
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < cols_; ++k) acc += static_cast<std::uint64_t>((*this)(i, k)) * o(k, j);
      m.set(i, j, static_cast<Residue>(acc % p));
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_field(field_, o.field_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw StructuralError("sum of differently shaped matrices");
  Matrix m(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = field_.add(data_[i], o.data_[i]);
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_same_field(field_, o.field_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw StructuralError("difference of differently shaped matrices");
  Matrix m(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = field_.sub(data_[i], o.data_[i]);
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m(*this);
  for (auto& x : m.data_) x = field_.neg(x);
  return m;
}

Matrix Matrix::scaled(Residue c) const {
  Matrix m(*this);
  kernels::scale_mod(m.data_, c % field_.p(), field_.p());
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.set(j, i, (*this)(i, j));
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw StructuralError("vector length does not match matrix");
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < cols_; ++k) acc += static_cast<std::uint64_t>((*this)(i, k)) * v[k];
    out[i] = static_cast<Residue>(acc % field_.p());
  }
  return out;
}

Matrix Matrix::pow(std::uint64_t e) const {
  if (!square()) throw StructuralError("power of a non-square matrix");
  Matrix acc = identity(field_, rows_), base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Matrix Matrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw StructuralError("submatrix out of range");
  Matrix m(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m.set(i, j, (*this)(r0 + i, c0 + j));
  return m;
}

Residue Matrix::trace() const {
  if (!square()) throw StructuralError("trace of a non-square matrix");
  Residue t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t = field_.add(t, (*this)(i, i));
  return t;
}

Residue Matrix::det() const {
  if (!square()) throw StructuralError("determinant of a non-square matrix");
  Matrix a(*this);
  const std::uint32_t p = field_.p();
  Residue d = 1;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t piv = c;
    while (piv < rows_ && a(piv, c) == 0) ++piv;
    if (piv == rows_) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(a.data_[piv * cols_ + j], a.data_[c * cols_ + j]);
      d = field_.neg(d);
    }
    const Residue pv = a(c, c);
    d = field_.mul(d, pv);
    const Residue iv = field_.inv(pv);
    for (std::size_t r = c + 1; r < rows_; ++r) {
      const Residue x = a(r, c);
      if (x) kernels::axpy_mod(a.row(r), a.row(c), field_.neg(field_.mul(x, iv)), p);
    }
  }
  return d;
}

Matrix Matrix::inverse() const {
  if (!square()) throw StructuralError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  const std::uint32_t p = field_.p();
  Matrix a(field_, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a.set(i, j, (*this)(i, j));
    a.set(i, n + i, 1);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) throw StructuralError("matrix is singular");
    if (piv != c)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a.data_[piv * 2 * n + j], a.data_[c * 2 * n + j]);
    kernels::scale_mod(a.row(c), field_.inv(a(c, c)), p);
    for (std::size_t r = 0; r < n; ++r)
      if (r != c && a(r, c)) kernels::axpy_mod(a.row(r), a.row(c), field_.neg(a(r, c)), p);
  }
  return a.submatrix(0, n, n, n);
}

bool Matrix::is_identity() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

bool Matrix::is_zero() const { return ff::is_zero(data_); }

std::uint64_t Matrix::order(std::uint64_t limit) const {
  if (!square()) throw StructuralError("order of a non-square matrix");
  Matrix x = *this;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (x.is_identity()) return k;
    x = x * *this;
  }
  return 0;
}

std::size_t Matrix::hash() const {
  std::uint64_t h = 1469598103934665603ULL ^ (rows_ * 131 + cols_);
  for (auto x : data_) h = (h ^ x) * 1099511628211ULL;
  return static_cast<std::size_t>(h);
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

Vec vec_add(const PrimeField& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw StructuralError("vector length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

Vec vec_sub(const PrimeField& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw StructuralError("vector length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

Vec vec_scale(const PrimeField& f, const Vec& a, Residue c) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(a[i], c);
  return out;
}

Residue dot(const PrimeField& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw StructuralError("vector length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = (acc + static_cast<std::uint64_t>(a[i]) * b[i]) % f.p();
  return static_cast<Residue>(acc);
}

bool is_zero(const Vec& v) {
  for (auto x : v)
    if (x) return false;
  return true;
}

}  // namespace reflcat::ff
