#include "reflcat/cohomology/twist.hpp"

#include <algorithm>

#include "reflcat/cohomology/bar.hpp"
#include "reflcat/error.hpp"

namespace reflcat::cohomology {

namespace {

void require_trivial_line(const GModule& m, const Cochain& w) {
  if (m.dim() != 1) throw StructuralError("twist data needs one-dimensional coefficients");
  for (std::size_t g = 0; g < m.order(); ++g)
    if (!m.action(g).is_identity()) throw StructuralError("twist data needs trivial coefficients");
  if (w.degree != 3 || w.group_order != m.order()) throw StructuralError("expected a 3-cochain on this group");
}

}  // namespace

bool TwistData::is_trivial() const {
  auto zero = [](Residue x) { return x == 0; };
  return std::all_of(gamma.begin(), gamma.end(), zero) && std::all_of(mu.begin(), mu.end(), zero);
}

bool pentagon_holds(const GModule& m, const Cochain& omega) {
  require_trivial_line(m, omega);
  const auto& f = m.field();
  const std::size_t n = m.order();
  auto w = [&](std::size_t a, std::size_t b, std::size_t c) { return omega.at({a, b, c})[0]; };
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const Residue lhs = f.add(w(m.mul(g, h), k, l), w(g, h, m.mul(k, l)));
          const Residue rhs = f.add(f.add(w(g, h, k), w(g, m.mul(h, k), l)), w(h, k, l));
          if (lhs != rhs) return false;
        }
  return true;
}

TwistData twist_data(const GModule& m, const Cochain& omega) {
  require_trivial_line(m, omega);
  if (!is_cocycle(m, omega)) throw DomainError("omega is not a 3-cocycle");
  const auto& f = m.field();
  const std::size_t n = m.order();
  auto w = [&](std::size_t a, std::size_t b, std::size_t c) { return omega.at({a, b, c})[0]; };
  auto conj = [&](std::size_t g, std::size_t x) { return m.mul(m.mul(g, x), m.inv(g)); };
  TwistData t;
  t.order = n;
  t.gamma.resize(n * n * n);
  t.mu.resize(n * n * n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t x = 0; x < n; ++x) {
        const std::size_t gh = m.mul(g, h);
        t.gamma[(g * n + h) * n + x] = f.sub(f.add(w(g, h, x), w(conj(gh, x), g, h)), w(g, conj(h, x), h));
        // Here h plays the role of y.
        const std::size_t gx = conj(g, x), gy = conj(g, h);
        t.mu[(g * n + x) * n + h] = f.sub(f.sub(w(gx, g, h), w(gx, gy, g)), w(g, x, h));
      }
  return t;
}

bool cohomologous(const GModule& m, const Cochain& a, const Cochain& b) {
  require_trivial_line(m, a);
  require_trivial_line(m, b);
  Cochain d = a;
  for (std::size_t i = 0; i < d.values.size(); ++i) d.values[i] = m.field().sub(a.values[i], b.values[i]);
  if (d.is_zero()) return true;
  return is_coboundary(m, d);
}

}  // namespace reflcat::cohomology
