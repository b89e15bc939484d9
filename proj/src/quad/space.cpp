#include "reflcat/quad/space.hpp"

#include <string>

#include "reflcat/error.hpp"
#include "reflcat/ff/linalg.hpp"

namespace reflcat::quad {

std::string_view to_string(WittSign s) {
  switch (s) {
    case WittSign::plus:
      return "plus";
    case WittSign::minus:
      return "minus";
    default:
      return "odd";
  }
}

std::optional<std::uint64_t> vector_count(std::uint32_t p, std::size_t dim, std::uint64_t cap) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    n *= p;
    if (n > cap) return std::nullopt;
  }
  return n;
}

Vec vector_from_index(std::uint32_t p, std::size_t dim, std::uint64_t index) {
  Vec v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    v[i] = static_cast<Residue>(index % p);
    index /= p;
  }
  return v;
}

QuadraticSpace::QuadraticSpace(Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.square() || gram_.rows() == 0) throw StructuralError("Gram matrix must be square and non-empty");
  if (!(gram_ == gram_.transpose())) throw StructuralError("Gram matrix must be symmetric");
  if (gram_.det() == 0) throw DomainError("quadratic form is degenerate");
}

QuadraticSpace QuadraticSpace::standard(const PrimeField& f, std::size_t n, Variant v) {
  if (n == 0) throw DomainError("dimension must be positive");
  Vec diag(n, 1);
  if (v == Variant::minus_type) diag[0] = f.nonsquare();
  return QuadraticSpace(Matrix::diagonal(f, diag));
}

QuadraticSpace QuadraticSpace::hyperbolic_plane(const PrimeField& f) {
  return QuadraticSpace(Matrix::from_rows(f, {{0, 1}, {1, 0}}));
}

QuadraticSpace QuadraticSpace::anisotropic_plane(const PrimeField& f) {
  return QuadraticSpace(Matrix::diagonal(f, {1, f.neg(f.nonsquare())}));
}

Residue QuadraticSpace::q(const Vec& v) const { return b(v, v); }

Residue QuadraticSpace::b(const Vec& u, const Vec& v) const { return ff::dot(field(), u, gram_.apply(v)); }

SquareClass QuadraticSpace::discriminant() const { return field().square_class(det()); }

bool QuadraticSpace::is_isometry(const Matrix& m) const {
  if (m.rows() != dim() || m.cols() != dim()) throw StructuralError("matrix does not act on the space");
  ff::require_same_field(m.field(), field());
  return m.transpose() * gram_ * m == gram_;
}

Matrix QuadraticSpace::reflection(const Vec& a) const {
  if (a.size() != dim()) throw StructuralError("axis has wrong length");
  const auto& f = field();
  const Residue qa = q(a);
  if (qa == 0) throw DomainError("reflection axis is isotropic");
  // v - 2 B(v,a)/Q(a) a, i.e. I - (2/Q(a)) a a^T G
  const Residue c = f.mul(2, f.inv(qa));
  const Vec ga = gram_.apply(a);
  Matrix m = Matrix::identity(f, dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) m.set(i, j, f.sub(m(i, j), f.mul(c, f.mul(a[i], ga[j]))));
  return m;
}

QuadraticSpace QuadraticSpace::twist(Residue d) const {
  if (d % p() == 0) throw DomainError("twist by zero");
  return QuadraticSpace(gram_.scaled(d));
}

QuadraticSpace QuadraticSpace::base_change(const Matrix& basis) const {
  if (basis.rows() != dim()) throw StructuralError("basis has wrong length");
  return QuadraticSpace(basis.transpose() * gram_ * basis);
}

bool is_isometric(const QuadraticSpace& a, const QuadraticSpace& b) {
  ff::require_same_field(a.field(), b.field());
  return a.dim() == b.dim() && a.discriminant() == b.discriminant();
}

WittSign witt_sign_from_discriminant(const QuadraticSpace& s) {
  if (s.dim() % 2) return WittSign::odd;
  const auto& f = s.field();
  Residue x = s.det();
  if ((s.dim() / 2) % 2) x = f.neg(x);
  return f.is_square(x) ? WittSign::plus : WittSign::minus;
}

std::optional<Vec> find_isotropic(const QuadraticSpace& s, const std::vector<Vec>& basis, std::uint64_t cap) {
  const std::uint32_t p = s.p();
  const std::size_t k = basis.size();
  if (k == 0) return std::nullopt;
  if (!vector_count(p, k, cap))
    throw ResourceError("isotropic search over p^" + std::to_string(k) + " vectors exceeds cap " +
                        std::to_string(cap));
  const auto& f = s.field();
  // Leading coefficient 1 at position lead, arbitrary below it.
  for (std::size_t lead = k; lead-- > 0;) {
    const std::uint64_t tail = *vector_count(p, lead, cap);
    for (std::uint64_t t = 0; t < tail; ++t) {
      Vec c = vector_from_index(p, lead, t);
      c.push_back(1);
      Vec v(s.dim(), 0);
      for (std::size_t i = 0; i <= lead; ++i)
        for (std::size_t j = 0; j < s.dim(); ++j) v[j] = f.add(v[j], f.mul(c[i], basis[i][j]));
      if (s.q(v) == 0) return v;
    }
  }
  return std::nullopt;
}

WittDecomposition witt_decompose(const QuadraticSpace& s, std::uint64_t cap) {
  if (!vector_count(s.p(), s.dim(), cap))
    throw ResourceError("Witt decomposition needs p^dim <= " + std::to_string(cap));
  const auto& f = s.field();
  WittDecomposition out;
  std::vector<Vec> w = ff::Subspace::whole(f, s.dim()).basis();
  while (w.size() >= 2) {
    auto u = find_isotropic(s, w, cap);
    if (!u) break;
    Vec y;
    for (const auto& x : w)
      if (s.b(*u, x) != 0) {
        y = x;
        break;
      }
    if (y.empty()) throw InvariantViolation("isotropic vector in radical of a non-degenerate subspace");
    y = ff::vec_scale(f, y, f.inv(s.b(*u, y)));
    Vec v = ff::vec_sub(f, y, ff::vec_scale(f, *u, f.mul(s.q(y), f.half())));
    std::vector<Vec> rest;
    for (const auto& x : w) {
      Vec r = ff::vec_sub(f, x, ff::vec_scale(f, *u, s.b(x, v)));
      r = ff::vec_sub(f, r, ff::vec_scale(f, v, s.b(x, *u)));
      rest.push_back(std::move(r));
    }
    out.pairs.push_back({*u, v});
    w = ff::Subspace::span(f, s.dim(), rest).basis();
  }
  out.anisotropic = w;
  if (s.dim() % 2)
    out.sign = WittSign::odd;
  else
    out.sign = w.empty() ? WittSign::plus : WittSign::minus;
  return out;
}

Residue beta_exponent(const QuadraticSpace& s, const Vec& x, const Vec& y) {
  const auto& f = s.field();
  const Residue t = f.sub(f.sub(s.q(ff::vec_add(f, x, y)), s.q(x)), s.q(y));
  return f.mul(t, f.half());
}

}  // namespace reflcat::quad
