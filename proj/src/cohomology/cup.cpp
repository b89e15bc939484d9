#include "reflcat/cohomology/cup.hpp"

#include "reflcat/cohomology/bar.hpp"
#include "reflcat/error.hpp"

namespace reflcat::cohomology {

Matrix beta_from_q(const quad::QuadraticSpace& s) {
  const auto& f = s.field();
  const std::size_t n = s.dim();
  Matrix b(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec x(n, 0), y(n, 0);
      x[i] = 1;
      y[j] = 1;
      b.set(i, j, quad::beta_exponent(s, x, y));
    }
  return b;
}

Cochain cup_product(const GModule& m, const Cochain& l, const Cochain& l2, const Matrix& beta) {
  if (l.degree != 2 || l2.degree != 2) throw DomainError("cup product expects 2-cochains");
  if (!is_cocycle(m, l) || !is_cocycle(m, l2)) throw DomainError("cup product of a non-cocycle");
  if (beta.rows() != m.dim() || beta.cols() != m.dim()) throw StructuralError("form does not match the module");
  const auto& f = m.field();
  const GModule triv = m.trivial_companion();
  Cochain out = Cochain::zero(triv, 4);
  const std::size_t n = m.order();
  std::size_t pos = 0;
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = 1; b < n; ++b) {
      const Vec left = l.at({a, b});
      const Vec bl = beta.transpose().apply(left);
      const Matrix& g = m.action(m.mul(a, b));
      for (std::size_t c = 1; c < n; ++c)
        for (std::size_t d = 1; d < n; ++d, ++pos) {
          if (ff::is_zero(left)) continue;
          out.values[pos] = ff::dot(f, bl, g.apply(l2.at({c, d})));
        }
    }
  return out;
}

Cochain cup_square(const GModule& m, const Cochain& l, const Matrix& beta) { return cup_product(m, l, l, beta); }

}  // namespace reflcat::cohomology
