#include <random>

#include "doctest.h"
#include "reflcat/error.hpp"
#include "reflcat/ff/field.hpp"
#include "reflcat/ff/kernels.hpp"
#include "reflcat/ff/linalg.hpp"
#include "reflcat/ff/poly.hpp"
#include "reflcat/ff/sparse.hpp"

using namespace reflcat;
using namespace reflcat::ff;

namespace {

Matrix random_matrix(const PrimeField& f, std::size_t r, std::size_t c, std::mt19937_64& rng, int zero_pct = 0) {
  Matrix m(f, r, c);
  std::uniform_int_distribution<Residue> d(0, f.p() - 1);
  std::uniform_int_distribution<int> z(0, 99);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, z(rng) < zero_pct ? 0 : d(rng));
  return m;
}

bool brute_square(const PrimeField& f, Residue x) {
  for (Residue r = 1; r < f.p(); ++r)
    if (f.mul(r, r) == x) return true;
  return false;
}

}  // namespace

TEST_SUITE("ff") {
  TEST_CASE("field construction rejects bad moduli") {
    CHECK_THROWS_AS(PrimeField(2), DomainError);
    CHECK_THROWS_AS(PrimeField(9), DomainError);
    CHECK_THROWS_AS(PrimeField(65537), DomainError);
    CHECK_NOTHROW(PrimeField(65521));
  }

  TEST_CASE("squares and roots at small primes") {
    CHECK(PrimeField(7).is_square(1));
    CHECK_FALSE(PrimeField(19).is_square(3));
    CHECK(PrimeField(11).is_square(5));
    CHECK(PrimeField(19).sqrt(6) == Residue{5});
    CHECK(PrimeField(11).sqrt(0) == Residue{0});
    CHECK(PrimeField(11).sqrt(5) == Residue{4});
    CHECK_THROWS_AS(PrimeField(7).is_square(0), DomainError);
    CHECK(PrimeField(3).nonsquare() == 2);
    CHECK(PrimeField(7).nonsquare() == 3);
  }

  TEST_CASE("Euler criterion agrees with exhaustive squaring") {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 101u}) {
      const PrimeField f(p);
      CHECK(!brute_square(f, f.nonsquare()));
      for (Residue x = 1; x < p; ++x) {
        CHECK(f.is_square(x) == brute_square(f, x));
        CHECK(f.is_square(x) != f.is_square(f.mul(x, f.nonsquare())));
        const auto r = f.sqrt(x);
        CHECK(r.has_value() == f.is_square(x));
        if (r) {
          CHECK(f.mul(*r, *r) == x);
          CHECK(*r <= p - *r);
        }
      }
    }
  }

  TEST_CASE("Tonelli-Shanks path above the scan threshold") {
    for (std::uint32_t p : {10007u, 40961u, 65521u}) {
      const PrimeField f(p);
      std::mt19937_64 rng(p);
      std::uniform_int_distribution<Residue> d(1, p - 1);
      for (int i = 0; i < 200; ++i) {
        const Residue x = d(rng);
        const auto r = f.sqrt(x);
        REQUIRE(r.has_value() == f.is_square(x));
        if (r) CHECK(f.mul(*r, *r) == x);
      }
    }
  }

  TEST_CASE("primitive root generates the unit group") {
    for (std::uint32_t p : {3u, 5u, 7u, 13u, 31u}) {
      const PrimeField f(p);
      CHECK(f.order(f.primitive_root()) == p - 1);
    }
  }

  TEST_CASE("F_p2 norm is multiplicative and the norm-one group is cyclic of order p+1") {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
      const Fp2Field k{PrimeField(p)};
      std::mt19937_64 rng(p);
      std::uniform_int_distribution<Residue> d(0, p - 1);
      for (int i = 0; i < 50; ++i) {
        const Fp2 x{d(rng), d(rng)}, y{d(rng), d(rng)};
        CHECK(k.norm(k.mul(x, y)) == k.base().mul(k.norm(x), k.norm(y)));
      }
      const Fp2 c = k.norm_one_generator();
      CHECK(k.norm(c) == 1);
      CHECK(k.order(c) == p + 1);
    }
  }

  TEST_CASE("rref basics") {
    const PrimeField f(5);
    CHECK(rank(Matrix::identity(f, 4)) == 4);
    CHECK(rank(Matrix(f, 3, 4)) == 0);
    CHECK(rank(Matrix::from_rows(f, {{1, 2}, {2, 4}})) == 1);
    const auto r = rref(Matrix::from_rows(f, {{0, 2, 4}, {0, 1, 3}}));
    CHECK(r.rank == 2);
    CHECK(r.pivots == std::vector<std::size_t>{1, 2});
  }

  TEST_CASE("kernel, image, solve") {
    const PrimeField f(5);
    CHECK(kernel_basis(Matrix::identity(f, 3)).empty());
    CHECK(image_basis(Matrix(f, 3, 3)).empty());
    const auto x = solve(Matrix::from_rows(f, {{1, 1}}), {3});
    REQUIRE(x.has_value());
    CHECK(f.add((*x)[0], (*x)[1]) == 3);
    CHECK_FALSE(solve(Matrix::from_rows(f, {{1, 1}, {2, 2}}), {1, 1}).has_value());
    CHECK_THROWS_AS(solve(Matrix::identity(f, 2), {1}), StructuralError);
  }

  TEST_CASE("random linear algebra invariants") {
    std::mt19937_64 rng(7);
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 65521u}) {
      const PrimeField f(p);
      for (int t = 0; t < 20; ++t) {
        const Matrix m = random_matrix(f, 3 + t % 5, 2 + t % 7, rng, 40);
        CHECK(rank(m) == rank(m.transpose()));
        const auto ker = kernel_basis(m);
        CHECK(ker.size() + rank(m) == m.cols());
        for (const auto& v : ker) CHECK(is_zero(m.apply(v)));
        std::uniform_int_distribution<Residue> d(0, p - 1);
        Vec b(m.rows());
        for (auto& e : b) e = d(rng);
        Matrix aug(f, m.rows(), m.cols() + 1);
        for (std::size_t i = 0; i < m.rows(); ++i) {
          for (std::size_t j = 0; j < m.cols(); ++j) aug.set(i, j, m(i, j));
          aug.set(i, m.cols(), b[i]);
        }
        const auto x = solve(m, b);
        CHECK(x.has_value() == (rank(m) == rank(aug)));
        if (x) CHECK(m.apply(*x) == b);
      }
      const Matrix a = random_matrix(f, 6, 6, rng);
      if (a.invertible()) CHECK((a * a.inverse()).is_identity());
      const Matrix b = random_matrix(f, 6, 6, rng);
      CHECK((a * b).det() == f.mul(a.det(), b.det()));
    }
  }

  TEST_CASE("subspace reduce gives canonical coset representatives") {
    const PrimeField f(7);
    std::mt19937_64 rng(3);
    const Matrix gen = random_matrix(f, 2, 5, rng);
    const Subspace w = Subspace::span(f, 5, {Vec(gen.row(0).begin(), gen.row(0).end()),
                                             Vec(gen.row(1).begin(), gen.row(1).end())});
    std::uniform_int_distribution<Residue> d(0, 6);
    for (int t = 0; t < 50; ++t) {
      Vec v(5), c(2);
      for (auto& e : v) e = d(rng);
      for (auto& e : c) e = d(rng);
      Vec shifted = v;
      for (std::size_t i = 0; i < w.dim(); ++i) shifted = vec_add(f, shifted, vec_scale(f, w.basis()[i], c[i % 2]));
      CHECK(w.reduce(v) == w.reduce(shifted));
      CHECK(w.contains(vec_sub(f, v, w.reduce(v))));
    }
  }

  TEST_CASE("subspace sum and intersection dimensions") {
    const PrimeField f(5);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
      const Matrix a = random_matrix(f, 3, 6, rng), b = random_matrix(f, 4, 6, rng, 30);
      std::vector<Vec> av, bv;
      for (std::size_t i = 0; i < 3; ++i) av.emplace_back(a.row(i).begin(), a.row(i).end());
      for (std::size_t i = 0; i < 4; ++i) bv.emplace_back(b.row(i).begin(), b.row(i).end());
      const Subspace u = Subspace::span(f, 6, av), w = Subspace::span(f, 6, bv);
      const Subspace s = u + w, i = u.intersect(w);
      CHECK(s.dim() + i.dim() == u.dim() + w.dim());
      for (const auto& v : i.basis()) CHECK((u.contains(v) && w.contains(v)));
    }
  }

  TEST_CASE("sparse rank agrees with dense rank") {
    std::mt19937_64 rng(42);
    for (std::uint32_t p : {3u, 5u, 7u, 65521u}) {
      const PrimeField f(p);
      for (int t = 0; t < 10; ++t) {
        const Matrix m = random_matrix(f, 50, 50, rng, t < 5 ? 90 : 97);
        std::vector<SparseRow> rows;
        for (std::size_t i = 0; i < 50; ++i) {
          SparseRow r;
          for (std::size_t j = 0; j < 50; ++j)
            if (m(i, j)) r.push_back({static_cast<std::uint32_t>(j), m(i, j)});
          rows.push_back(r);
        }
        CHECK(sparse_rank(f, 50, rows) == rank(m));
      }
    }
  }

  TEST_CASE("sparse rank of a long stream of duplicates and of a standard basis") {
    const PrimeField f(5);
    SparseEliminator e(f, 4);
    const SparseRow r{{0, 1}, {3, 2}};
    for (int i = 0; i < 1000000; ++i) e.add_row(r);
    CHECK(e.rank() == 1);
    std::vector<SparseRow> basis;
    for (std::uint32_t i = 0; i < 30; ++i) basis.push_back({{i, 1}});
    CHECK(sparse_rank(f, 30, basis) == 30);
  }

  TEST_CASE("sparse membership and memory budget") {
    const PrimeField f(7);
    SparseEliminator e(f, 10);
    e.add_row({{0, 1}, {1, 1}});
    e.add_row({{1, 1}, {2, 1}});
    CHECK(e.in_span({{0, 1}, {2, 6}}));
    CHECK_FALSE(e.in_span({{0, 1}, {2, 1}}));
    CHECK(e.rank() == 2);
    CHECK_THROWS_AS(SparseEliminator(f, 1000, 100), ResourceError);
  }

  TEST_CASE("normalize_row merges and drops zeros") {
    const PrimeField f(5);
    const SparseRow r = normalize_row(f, {{3, 2}, {1, 4}, {3, 3}, {0, 0}});
    CHECK(r == SparseRow{{1, 4}});
  }

  TEST_CASE("AVX2 kernels match the scalar reference") {
    std::mt19937_64 rng(5);
    for (std::uint32_t p : {3u, 5u, 7u, 251u, 32749u}) {
      std::uniform_int_distribution<Residue> d(0, p - 1);
      for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 31u, 64u, 1000u}) {
        Vec a(n), b(n);
        for (auto& x : a) x = d(rng);
        for (auto& x : b) x = d(rng);
        const Residue c = d(rng);
        Vec s1 = a, s2 = a;
        kernels::scalar::axpy_mod(s1, b, c, p);
        kernels::avx2::axpy_mod(s2, b, c, p);
        CHECK(s1 == s2);
        Vec t1 = b, t2 = b;
        kernels::scalar::scale_mod(t1, c, p);
        kernels::avx2::scale_mod(t2, c, p);
        CHECK(t1 == t2);
      }
      // Extremes of the Barrett range.
      Vec hi(16, p - 1), hi2 = hi;
      kernels::scalar::axpy_mod(hi, Vec(16, p - 1), p - 1, p);
      kernels::avx2::axpy_mod(hi2, Vec(16, p - 1), p - 1, p);
      CHECK(hi == hi2);
    }
  }

  TEST_CASE("dispatch results are ISA independent") {
    const PrimeField f(13);
    std::mt19937_64 rng(9);
    const Matrix m = random_matrix(f, 40, 40, rng);
    kernels::force_isa(kernels::Isa::scalar);
    const auto r1 = rref(m);
    const Matrix sq1 = m * m;
    kernels::reset_isa();
    const auto r2 = rref(m);
    const Matrix sq2 = m * m;
    CHECK(r1.reduced == r2.reduced);
    CHECK(sq1 == sq2);
  }

  TEST_CASE("characteristic polynomial matches det(tI - A) at every point") {
    std::mt19937_64 rng(17);
    for (std::uint32_t p : {3u, 5u, 7u, 13u}) {
      const PrimeField f(p);
      for (int t = 0; t < 10; ++t) {
        const std::size_t n = 1 + t % 6;
        const Matrix a = random_matrix(f, n, n, rng, t % 2 ? 60 : 0);
        const Poly c = charpoly(a);
        CHECK(degree(c) == static_cast<int>(n));
        for (Residue x = 0; x < p; ++x) {
          Residue val = 0;
          for (std::size_t k = c.size(); k-- > 0;) val = f.add(f.mul(val, x), c[k]);
          CHECK(val == (Matrix::scalar(f, n, x) - a).det());
        }
        CHECK(evaluate(c, a).is_zero());
      }
    }
  }

  TEST_CASE("irreducible factors multiply back to the radical") {
    std::mt19937_64 rng(23);
    const PrimeField f(5);
    // (x^2 + 2)^2 (x + 1)^5 (x^3 + x + 1)
    Poly a{2, 0, 1};
    a = poly_mul(f, a, a);
    Poly b{1, 1};
    for (int i = 0; i < 5; ++i) a = poly_mul(f, a, b);
    a = poly_mul(f, a, Poly{1, 1, 0, 1});
    const auto facs = irreducible_factors(f, a, rng);
    REQUIRE(facs.size() == 3);
    CHECK(facs[0] == Poly{1, 1});
    CHECK(facs[1] == Poly{2, 0, 1});
    CHECK(facs[2] == Poly{1, 1, 0, 1});
    for (const auto& g : facs) CHECK(poly_mod(f, a, g).empty());
  }
}
