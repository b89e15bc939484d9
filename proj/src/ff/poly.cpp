#include "reflcat/ff/poly.hpp"

#include <algorithm>

#include "reflcat/error.hpp"

namespace reflcat::ff {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) {
  Poly b = a;
  trim(b);
  return static_cast<int>(b.size()) - 1;
}

Poly poly_add(const PrimeField& f, const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = f.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(c);
  return c;
}

Poly poly_sub(const PrimeField& f, const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = f.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(c);
  return c;
}

Poly poly_mul(const PrimeField& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  trim(c);
  return c;
}

std::pair<Poly, Poly> poly_divmod(const PrimeField& f, const Poly& a, const Poly& b) {
  Poly r = a, d = b;
  trim(r);
  trim(d);
  if (d.empty()) throw DomainError("polynomial division by zero");
  if (r.size() < d.size()) return {{}, r};
  Poly q(r.size() - d.size() + 1, 0);
  const Residue inv_lead = f.inv(d.back());
  for (std::size_t k = q.size(); k-- > 0;) {
    const Residue c = f.mul(r[k + d.size() - 1], inv_lead);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) r[k + j] = f.sub(r[k + j], f.mul(c, d[j]));
  }
  trim(q);
  trim(r);
  return {q, r};
}

Poly poly_mod(const PrimeField& f, const Poly& a, const Poly& m) { return poly_divmod(f, a, m).second; }

Poly make_monic(const PrimeField& f, const Poly& a) {
  Poly b = a;
  trim(b);
  if (b.empty()) return b;
  const Residue inv = f.inv(b.back());
  for (auto& x : b) x = f.mul(x, inv);
  return b;
}

Poly poly_gcd(const PrimeField& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(f, a);
}

Poly derivative(const PrimeField& f, const Poly& a) {
  if (a.size() <= 1) return {};
  Poly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = f.mul(a[i], static_cast<Residue>(i % f.p()));
  trim(d);
  return d;
}

Poly powmod(const PrimeField& f, Poly base, std::uint64_t e, const Poly& m) {
  Poly acc{1};
  acc = poly_mod(f, acc, m);
  base = poly_mod(f, base, m);
  while (e) {
    if (e & 1) acc = poly_mod(f, poly_mul(f, acc, base), m);
    base = poly_mod(f, poly_mul(f, base, base), m);
    e >>= 1;
  }
  return acc;
}

Poly charpoly(const Matrix& a) {
  if (!a.square()) throw StructuralError("characteristic polynomial of a non-square matrix");
  const auto& f = a.field();
  const std::size_t n = a.rows();
  Matrix h = a;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h(piv, j) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) {
        const Residue t = h(piv, c);
        h.set(piv, c, h(j + 1, c));
        h.set(j + 1, c, t);
      }
      for (std::size_t r = 0; r < n; ++r) {
        const Residue t = h(r, piv);
        h.set(r, piv, h(r, j + 1));
        h.set(r, j + 1, t);
      }
    }
    const Residue inv = f.inv(h(j + 1, j));
    for (std::size_t r = j + 2; r < n; ++r) {
      const Residue m = f.mul(h(r, j), inv);
      if (m == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h.set(r, c, f.sub(h(r, c), f.mul(m, h(j + 1, c))));
      for (std::size_t s = 0; s < n; ++s) h.set(s, j + 1, f.add(h(s, j + 1), f.mul(m, h(s, r))));
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{i<j<=k} h_{j,j-1}) p_{i-1}
  std::vector<Poly> ps{Poly{1}};
  for (std::size_t k = 0; k < n; ++k) {
    Poly next = poly_mul(f, Poly{f.neg(h(k, k)), 1}, ps[k]);
    Residue prod = 1;
    for (std::size_t i = k; i-- > 0;) {
      prod = f.mul(prod, h(i + 1, i));
      if (prod == 0) break;
      const Residue c = f.mul(h(i, k), prod);
      if (c) next = poly_sub(f, next, poly_mul(f, Poly{c}, ps[i]));
    }
    ps.push_back(std::move(next));
  }
  return ps[n];
}

Matrix evaluate(const Poly& p, const Matrix& a) {
  const auto& f = a.field();
  Matrix acc(f, a.rows(), a.cols());
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * a + Matrix::scalar(f, a.rows(), p[k]);
  return acc;
}

namespace {

// f(x) = g(x^p) = g(x)^p over F_p; returns g.
Poly pth_root(const PrimeField& f, const Poly& a) {
  Poly g;
  for (std::size_t i = 0; i < a.size(); i += f.p()) g.push_back(a[i]);
  trim(g);
  return g;
}

void equal_degree_split(const PrimeField& f, const Poly& a, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  const int n = degree(a);
  if (n <= d) {
    out.push_back(make_monic(f, a));
    return;
  }
  std::uniform_int_distribution<Residue> coef(0, f.p() - 1);
  for (;;) {
    Poly r(static_cast<std::size_t>(n), 0);
    for (auto& x : r) x = coef(rng);
    trim(r);
    if (degree(r) < 1) continue;
    // r^((p^d - 1)/2) = (prod_{i<d} r^(p^i))^((p-1)/2)
    Poly frob = poly_mod(f, r, a), prod{1};
    for (int i = 0; i < d; ++i) {
      prod = poly_mod(f, poly_mul(f, prod, frob), a);
      frob = powmod(f, frob, f.p(), a);
    }
    const Poly b = poly_sub(f, powmod(f, prod, (f.p() - 1) / 2, a), Poly{1});
    const Poly g = poly_gcd(f, a, b);
    const int dg = degree(g);
    if (dg > 0 && dg < n) {
      equal_degree_split(f, g, d, rng, out);
      equal_degree_split(f, poly_divmod(f, a, g).first, d, rng, out);
      return;
    }
  }
}

void squarefree_factors(const PrimeField& f, Poly a, std::mt19937_64& rng, std::vector<Poly>& out) {
  a = make_monic(f, a);
  const Poly x{0, 1};
  Poly h = poly_mod(f, x, a);
  for (int d = 1; degree(a) >= 2 * d; ++d) {
    h = powmod(f, h, f.p(), a);
    const Poly g = poly_gcd(f, a, poly_sub(f, h, x));
    if (degree(g) > 0) {
      equal_degree_split(f, g, d, rng, out);
      a = poly_divmod(f, a, g).first;
      h = poly_mod(f, h, a);
    }
  }
  if (degree(a) > 0) out.push_back(make_monic(f, a));
}

void collect(const PrimeField& f, const Poly& a, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (degree(a) <= 0) return;
  const Poly da = derivative(f, a);
  if (da.empty()) {
    collect(f, pth_root(f, a), rng, out);
    return;
  }
  const Poly g = poly_gcd(f, a, da);
  squarefree_factors(f, poly_divmod(f, a, g).first, rng, out);
  collect(f, g, rng, out);
}

}  // namespace

std::vector<Poly> irreducible_factors(const PrimeField& f, const Poly& a, std::mt19937_64& rng) {
  std::vector<Poly> out;
  collect(f, a, rng, out);
  std::sort(out.begin(), out.end(), [](const Poly& x, const Poly& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace reflcat::ff
