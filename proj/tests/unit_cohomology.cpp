#include <algorithm>
#include <random>

#include "doctest.h"
#include "reflcat/cohomology/bar.hpp"
#include "reflcat/cohomology/cup.hpp"
#include "reflcat/cohomology/cyclic.hpp"
#include "reflcat/cohomology/stable.hpp"
#include "reflcat/cohomology/twist.hpp"
#include "reflcat/error.hpp"
#include "reflcat/families/build.hpp"
#include "reflcat/ff/linalg.hpp"

using namespace reflcat;
using namespace reflcat::cohomology;
using ff::Matrix;
using ff::PrimeField;

namespace {

Matrix perm_matrix(const PrimeField& f, const std::vector<std::size_t>& images) {
  Matrix m(f, images.size(), images.size());
  for (std::size_t i = 0; i < images.size(); ++i) m.set(images[i], i, 1);
  return m;
}

Matrix cycle_matrix(const PrimeField& f, std::size_t n) {
  std::vector<std::size_t> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = (i + 1) % n;
  return perm_matrix(f, im);
}

Matrix jordan(const PrimeField& f, std::size_t n) {
  Matrix m = Matrix::identity(f, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m.set(i, i + 1, 1);
  return m;
}

// C_p x| C_q inside AGL(1, p), q | p - 1.
group::MatGroup affine_group(std::uint32_t p, std::uint32_t q) {
  const PrimeField f(p);
  const auto t = f.pow(f.primitive_root(), (p - 1) / q);
  return group::MatGroup(f, 2, {Matrix::from_rows(f, {{1, 1}, {0, 1}}), Matrix::from_rows(f, {{t, 0}, {0, 1}})});
}

Cochain random_cochain(const GModule& m, std::size_t degree, std::mt19937_64& rng) {
  Cochain c = Cochain::zero(m, degree);
  std::uniform_int_distribution<ff::Residue> d(0, m.field().p() - 1);
  for (auto& x : c.values) x = d(rng);
  return c;
}

// Smallest |G|-by-module instance grid for the cyclic cross-checks.
struct CyclicInstance {
  std::uint32_t p;
  std::size_t m;
  Matrix sigma;
};

std::vector<CyclicInstance> cyclic_instances() {
  std::vector<CyclicInstance> out;
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const PrimeField f(p);
    out.push_back({p, p, jordan(f, 2)});
    out.push_back({p, p, Matrix::identity(f, 1)});
    out.push_back({p, p, cycle_matrix(f, p)});
    out.push_back({p, 2, Matrix::scalar(f, 1, f.neg(1))});
    out.push_back({p, 2, Matrix::diagonal(f, {1, f.neg(1)})});
    out.push_back({p, p - 1, Matrix::scalar(f, 1, f.primitive_root())});
    out.push_back({p, 4, cycle_matrix(f, 4)});
  }
  const PrimeField f3(3);
  out.push_back({3, 3, jordan(f3, 3)});
  out.push_back({3, 9, jordan(f3, 4)});
  out.push_back({3, 6, Matrix::diagonal(f3, {2, 1})});
  out.push_back({3, 6, jordan(f3, 2).scaled(2)});
  return out;
}

// SO(3,p) on the natural module.
GModule rotation_module(std::uint32_t p) {
  const auto o = families::build(families::parse_family_spec("O:dim=3,p=" + std::to_string(p)));
  std::vector<Matrix> so;
  for (const auto& e : o.group.elements())
    if (e.det() == 1) so.push_back(e);
  std::iter_swap(so.begin(), std::find_if(so.begin(), so.end(), [](const Matrix& e) { return e.is_identity(); }));
  return GModule(so, so);
}

std::vector<std::size_t> sylow_normalizer(const GModule& m, std::size_t gen) {
  const auto s = cyclic_subgroup(m, gen);
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < m.order(); ++g) {
    const std::size_t c = m.mul(m.mul(g, gen), m.inv(g));
    if (std::find(s.begin(), s.end(), c) != s.end()) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_SUITE("cohomology") {
  TEST_CASE("small cyclic examples") {
    const PrimeField f5(5);
    const auto c3 = cyclic_module(cycle_matrix(f5, 3), Matrix::identity(f5, 1));
    CHECK(bar_h_n(c3, 1).dim == 0);
    const auto c5 = cyclic_module(cycle_matrix(f5, 5), Matrix::identity(f5, 1));
    CHECK(bar_h_n(c5, 2).dim == 1);
    CHECK(cyclic_h_n(Matrix::identity(f5, 1), 2, 5).dim == 1);
    CHECK(cyclic_h_n(Matrix::identity(f5, 1), 2, 3).dim == 0);
    CHECK(bar_h_n(c5, 0).dim == 1);
    CHECK_THROWS_AS(cyclic_h_n(cycle_matrix(f5, 3), 2, 5), DomainError);
  }

  TEST_CASE("d o d = 0") {
    std::mt19937_64 rng(1);
    const PrimeField f3(3);
    const auto s3 = GModule::natural(group::MatGroup(f3, 3, {perm_matrix(f3, {1, 0, 2}), perm_matrix(f3, {0, 2, 1})}));
    const auto a = GModule::natural(affine_group(5, 4));
    const auto z = cyclic_module(cycle_matrix(f3, 3), jordan(f3, 2));
    for (const GModule* m : {&s3, &a, &z})
      for (std::size_t n = 0; n <= 2; ++n)
        CHECK(differential(*m, differential(*m, random_cochain(*m, n, rng))).is_zero());
    CHECK(s3.is_homomorphism());
  }

  TEST_CASE("bar complex agrees with the cyclic formula") {
    std::size_t instances = 0;
    for (const auto& inst : cyclic_instances()) {
      const PrimeField f(inst.p);
      const auto m = cyclic_module(cycle_matrix(f, inst.m), inst.sigma.pow(1));
      if (m.order() * m.dim() > 50) continue;
      CAPTURE(inst.p);
      CAPTURE(inst.m);
      CAPTURE(inst.sigma.to_string());
      ++instances;
      for (std::size_t n = 0; n <= 3; ++n) CHECK(bar_h_n(m, n).dim == cyclic_h_n(inst.sigma, n, inst.m).dim);
    }
    CHECK(instances >= 20);
  }

  TEST_CASE("coprime orders give vanishing cohomology") {
    std::mt19937_64 rng(2);
    int count = 0;
    for (std::uint32_t p : {5u, 7u, 11u}) {
      const PrimeField f(p);
      for (std::size_t q : {2u, 3u, 4u}) {
        if (q % p == 0) continue;
        for (std::size_t k = 1; k <= 2; ++k) {
          // A random matrix of order dividing q: conjugate of a permutation action.
          const Matrix base = k == 1 ? Matrix::scalar(f, 1, q % 2 ? 1 : f.neg(1)) : cycle_matrix(f, 2).pow(q % 2 ? 2 : 1);
          Matrix pm(f, k, k);
          do {
            for (std::size_t i = 0; i < k; ++i)
              for (std::size_t j = 0; j < k; ++j) pm.set(i, j, std::uniform_int_distribution<ff::Residue>(0, p - 1)(rng));
          } while (!pm.invertible());
          const Matrix sigma = pm * base * pm.inverse();
          const auto m = cyclic_module(cycle_matrix(f, q), sigma);
          for (std::size_t n = 1; n <= 2; ++n) {
            CHECK(bar_h_n(m, n).dim == 0);
            ++count;
          }
        }
      }
      CHECK(bar_h_n(GModule::natural(families::build_i2(p, 3, p % 3 == 1 ? families::Sign::plus : families::Sign::minus).group), 2).dim == 0);
      ++count;
    }
    CHECK(count >= 20);
  }

  TEST_CASE("H2 of S4 on the standard module over F_3 vanishes") {
    const auto a3 = families::build_coxeter(families::Family::A, 3, 3);
    const auto m = GModule::natural(a3.group);
    CHECK(m.order() == 24);
    CHECK(bar_h_n(m, 2).dim == 0);
    CHECK(h2_stable_elements(m).dim == 0);
  }

  TEST_CASE("stable elements agree with the bar complex") {
    const PrimeField f3(3);
    std::vector<GModule> mods;
    for (auto [p, q] : {std::pair{3u, 2u}, {5u, 2u}, {5u, 4u}, {7u, 3u}, {7u, 2u}}) {
      const auto g = affine_group(p, q);
      mods.push_back(GModule::natural(g));
      mods.push_back(GModule::trivial(g, 1));
      // Dual action x -> (x^{-1})^T.
      const auto nat = GModule::natural(g);
      std::vector<Matrix> dual;
      for (const auto& e : nat.elements()) dual.push_back(e.inverse().transpose());
      mods.emplace_back(nat.elements(), dual);
    }
    const auto s3 = group::MatGroup(f3, 3, {perm_matrix(f3, {1, 0, 2}), perm_matrix(f3, {0, 2, 1})});
    mods.push_back(GModule::natural(s3));
    mods.push_back(GModule::trivial(s3, 1));
    const auto a4 = group::MatGroup(f3, 4, {perm_matrix(f3, {1, 2, 0, 3}), perm_matrix(f3, {1, 0, 3, 2})});
    mods.push_back(GModule::natural(a4));
    mods.push_back(GModule::trivial(a4, 1));
    mods.push_back(GModule::natural(families::build_coxeter(families::Family::A, 3, 3).group));
    for (const auto& m : mods) {
      CAPTURE(m.order());
      CAPTURE(m.dim());
      CHECK(h2_stable_elements(m).dim == bar_h_n(m, 2).dim);
    }
  }

  TEST_CASE("H2 of the rank-3 orthogonal groups over F_5") {
    const auto o2 = families::build(families::parse_family_spec("O2:dim=3,p=5"));
    const auto m = GModule::natural(o2.group);
    const auto r = h2_stable_elements(m);
    CHECK(r.sylow_order == 5);
    const auto nm = m.restrict_to(sylow_normalizer(m, r.sylow_generator));
    CHECK(nm.order() == 20);
    CHECK(r.dim == bar_h_n(nm, 2).dim);
    CHECK(r.dim == 0);
    CHECK(h2_stable_elements(GModule::natural(families::build_abar(3, 5).group)).dim == r.dim);

    const auto so = rotation_module(5);
    CHECK(so.order() == 120);
    const auto rs = h2_stable_elements(so);
    const auto sn = so.restrict_to(sylow_normalizer(so, rs.sylow_generator));
    CHECK(rs.dim == 1);
    CHECK(bar_h_n(sn, 2).dim == 1);
  }

  TEST_CASE("H2 of S5 on permutation plus trivial over F_5") {
    const PrimeField f5(5);
    auto embed = [&](const Matrix& perm) { return Matrix::block_diagonal(perm, Matrix::identity(f5, 1)); };
    const auto s5 = group::MatGroup(f5, 6, std::vector<Matrix>{embed(cycle_matrix(f5, 5)), embed(perm_matrix(f5, {1, 0, 2, 3, 4}))});
    CHECK(s5.order() == 120);
    CHECK(h2_stable_elements(GModule::natural(s5)).dim == 0);
  }

  TEST_CASE("non-cyclic Sylow is refused") {
    const PrimeField f3(3);
    const auto g = group::MatGroup(f3, 2, {Matrix::from_rows(f3, {{1, 1}, {0, 1}}), Matrix::scalar(f3, 2, 2)});
    const auto klein = group::MatGroup(PrimeField(3), 2, {Matrix::diagonal(f3, {2, 1}), Matrix::diagonal(f3, {1, 2})});
    CHECK(h2_stable_elements(GModule::natural(g)).sylow_order == 3);
    CHECK(h2_stable_elements(GModule::natural(klein)).dim == 0);
    const PrimeField f5(5);
    const auto e = group::MatGroup(f5, 3, {Matrix::from_rows(f5, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}),
                                           Matrix::from_rows(f5, {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}})});
    CHECK(e.order() == 25);
    CHECK_THROWS_AS(h2_stable_elements(GModule::natural(e)), DomainError);
  }

  TEST_CASE("restriction") {
    const auto m = rotation_module(5);
    const auto zero = Cochain::zero(m, 2);
    const auto r = h2_stable_elements(m);
    const auto sylow = cyclic_subgroup(m, r.sylow_generator);
    CHECK(restriction(m, zero, sylow).second.is_zero());
    CHECK(restriction(m, zero, {0}).second.values.empty());
    CHECK_THROWS_AS(restriction(m, zero, {0, r.sylow_generator}), StructuralError);

    // H^2 of the Sylow normalizer restricts injectively to the Sylow subgroup.
    const auto norm = sylow_normalizer(m, r.sylow_generator);
    const auto nm = m.restrict_to(norm);
    const auto h = bar_h_n(nm, 2, true);
    REQUIRE(h.dim == 1);
    REQUIRE(h.representatives.size() == 1);
    std::vector<std::size_t> sylow_in_n;
    for (auto s : sylow) sylow_in_n.push_back(nm.index(m.element(s)));
    const auto [sm, res] = restriction(nm, h.representatives[0], sylow_in_n);
    CHECK(is_cocycle(sm, res));
    const std::size_t gen = sm.index(m.element(r.sylow_generator));
    CHECK(cyclic_h_n(sm.action(gen), 2).dim == 1);
    const auto inv = cyclic_class_invariant(sm, gen, res);
    Matrix norm_map(sm.field(), 3, 3);
    for (std::size_t i = 0; i < sm.order(); ++i) norm_map = norm_map + sm.action(i);
    CHECK_FALSE(ff::Subspace::image(norm_map).contains(inv));
    CHECK_FALSE(is_coboundary(sm, res));
  }

  TEST_CASE("LHS vanishing rule") {
    const auto b3 = families::build_coxeter(families::Family::B, 3, 5);
    const auto m = GModule::natural(b3.group);
    const std::size_t minus = m.index(Matrix::scalar(m.field(), 3, m.field().neg(1)));
    CHECK(lhs_vanishing(m, {0, minus}, 4));
    CHECK_FALSE(lhs_vanishing(m, {0}, 2));
    CHECK_THROWS_AS(lhs_vanishing(m, {0, m.index(b3.group.generators()[0])}, 2), StructuralError);

    // D4 in ambient coordinates over F_3: signed permutations with an even
    // number of sign changes; A is the diagonal part.
    const PrimeField f3(3);
    const quad::QuadraticSpace s(Matrix::identity(f3, 4));
    const auto d4 = group::MatGroup(f3, 4, {s.reflection({1, 2, 0, 0}), s.reflection({0, 1, 2, 0}),
                                            s.reflection({0, 0, 1, 2}), s.reflection({0, 0, 1, 1})});
    CHECK(d4.order() == 192);
    const auto dm = GModule::natural(d4);
    std::vector<std::size_t> diag;
    for (std::size_t i = 0; i < dm.order(); ++i) {
      const auto& e = dm.element(i);
      bool is_diag = true;
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
          if (r != c && e(r, c)) is_diag = false;
      if (is_diag) diag.push_back(i);
    }
    CHECK(diag.size() == 8);
    CHECK(lhs_vanishing(dm, diag, 2));
  }

  TEST_CASE("beta from Q") {
    const auto s = families::build_abar(3, 5).space;
    const Matrix b = beta_from_q(s);
    CHECK(b == s.gram());
    CHECK(b == b.transpose());
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
      ff::Vec x(3), y(3);
      for (auto& v : x) v = rng() % 5;
      for (auto& v : y) v = rng() % 5;
      const auto& f = s.field();
      CHECK(ff::dot(f, x, b.apply(x)) == s.q(x));
      CHECK(f.mul(2, ff::dot(f, x, b.apply(y))) == f.sub(f.sub(s.q(ff::vec_add(f, x, y)), s.q(x)), s.q(y)));
    }
  }

  TEST_CASE("cup square of the Sylow class in rank 3 over F_5") {
    const auto o2 = families::build(families::parse_family_spec("O2:dim=3,p=5"));
    const auto m = GModule::natural(o2.group);
    const auto r = h2_stable_elements(m);
    const auto sm = m.restrict_to(cyclic_subgroup(m, r.sylow_generator));
    const std::size_t gen = sm.index(m.element(r.sylow_generator));
    const auto h = cyclic_h_n(sm.action(gen), 2);
    REQUIRE(h.dim == 1);
    // A^sigma is the fixed line; a vector outside N A represents the generator.
    const auto fixed = ff::kernel_basis(sm.action(gen) - Matrix::identity(sm.field(), 3));
    REQUIRE(fixed.size() == 1);
    const auto l = cyclic_cocycle(sm, gen, fixed[0]);
    CHECK(is_cocycle(sm, l));
    CHECK_FALSE(is_coboundary(sm, l));
    const Matrix beta = beta_from_q(o2.space);
    const auto sq = cup_square(sm, l, beta);
    const auto triv = sm.trivial_companion();
    CHECK(is_cocycle(triv, sq));
    CHECK(is_coboundary(triv, sq));
    CHECK(sq.is_zero());
    CHECK(cup_square(sm, Cochain::zero(sm, 2), beta).is_zero());
    CHECK(o2.space.q(fixed[0]) == 0);
    std::mt19937_64 rng(4);
    CHECK_THROWS_AS(cup_square(sm, random_cochain(sm, 2, rng), beta), DomainError);

    // The same for the class of the rotation group, restricted from G.
    const auto so = rotation_module(5);
    const auto rs = h2_stable_elements(so);
    REQUIRE(rs.dim == 1);
    const auto ss = so.restrict_to(cyclic_subgroup(so, rs.sylow_generator));
    const auto ls = cyclic_cocycle(ss, ss.index(so.element(rs.sylow_generator)), rs.stable_vectors.at(0));
    CHECK(is_coboundary(ss.trivial_companion(), cup_square(ss, ls, beta_from_q(families::build(
                                                                        families::parse_family_spec("O:dim=3,p=5")).space))));
  }

  TEST_CASE("cup product is bilinear and a non-coboundary example") {
    const PrimeField f5(5);
    const auto m = cyclic_module(cycle_matrix(f5, 5), Matrix::identity(f5, 1));
    const Matrix beta = Matrix::identity(f5, 1);
    const auto l = cyclic_cocycle(m, 1, {1});
    const auto l2 = cyclic_cocycle(m, 1, {2});
    const auto sum = cyclic_cocycle(m, 1, {3});
    const auto a = cup_product(m, sum, l, beta), b = cup_product(m, l, l, beta), c = cup_product(m, l2, l, beta);
    for (std::size_t i = 0; i < a.values.size(); ++i) CHECK(a.values[i] == f5.add(b.values[i], c.values[i]));
    // The square of the generator of H^2(C_5, F_5) generates H^4.
    CHECK_FALSE(is_coboundary(m.trivial_companion(), b));
  }

  TEST_CASE("twist data and the pointed pentagon") {
    const PrimeField f3(3);
    const auto c3 = cyclic_module(cycle_matrix(f3, 3), Matrix::identity(f3, 1));
    const auto s3 = GModule::trivial(group::MatGroup(f3, 3, {perm_matrix(f3, {1, 0, 2}), perm_matrix(f3, {0, 2, 1})}), 1);
    std::mt19937_64 rng(5);
    for (const GModule* m : {&c3, &s3}) {
      const auto zero = Cochain::zero(*m, 3);
      CHECK(twist_data(*m, zero).is_trivial());
      for (int i = 0; i < 20; ++i) {
        const auto w = random_cochain(*m, 3, rng);
        CHECK(pentagon_holds(*m, w) == is_cocycle(*m, w));
        const auto cob = differential(*m, random_cochain(*m, 2, rng));
        CHECK(pentagon_holds(*m, cob));
        CHECK(cohomologous(*m, cob, zero));
      }
    }
    // Generator of H^3(C_3, F_3): w(g^a, g^b, g^c) = a * floor((b + c) / 3).
    Cochain w = Cochain::zero(c3, 3);
    for (std::size_t a = 1; a < 3; ++a)
      for (std::size_t b = 1; b < 3; ++b)
        for (std::size_t c = 1; c < 3; ++c) w.set({a, b, c}, {static_cast<ff::Residue>((a * ((b + c) / 3)) % 3)});
    CHECK(is_cocycle(c3, w));
    CHECK(pentagon_holds(c3, w));
    CHECK_FALSE(cohomologous(c3, w, Cochain::zero(c3, 3)));
    const auto shifted = [&] {
      auto x = w;
      const auto d = differential(c3, random_cochain(c3, 2, rng));
      for (std::size_t i = 0; i < x.values.size(); ++i) x.values[i] = f3.add(x.values[i], d.values[i]);
      return x;
    }();
    CHECK(cohomologous(c3, w, shifted));
    const auto td = twist_data(c3, w);
    CHECK(td.order == 3);
    Cochain bad = w;
    bad.values[0] = f3.add(bad.values[0], 1);
    CHECK_THROWS_AS(twist_data(c3, bad), DomainError);
  }

  TEST_CASE("memory budget refusal") {
    const auto o2 = families::build(families::parse_family_spec("O2:dim=3,p=5"));
    const auto m = GModule::natural(o2.group);
    CHECK_THROWS_AS(bar_h_n(m, 2, false, 1u << 20), ResourceError);
  }
}
