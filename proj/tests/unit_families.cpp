#include <algorithm>
#include <set>
#include <tuple>

#include "doctest.h"
#include "reflcat/error.hpp"
#include "reflcat/families/build.hpp"
#include "reflcat/families/roots.hpp"
#include "reflcat/families/spec.hpp"
#include "reflcat/families/verify.hpp"
#include "reflcat/group/meataxe.hpp"

using namespace reflcat;
using namespace reflcat::families;
using ff::Matrix;
using ff::PrimeField;
using ff::SquareClass;

namespace {

std::int64_t idot(const IntVec& a, const IntVec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_prime(std::uint32_t n) {
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return n > 1;
}

// tr(r_a r_b) = n - 4 + 4 B(a,b)^2 / (Q(a) Q(b)).
ff::Residue product_trace(const quad::QuadraticSpace& s, const ff::Vec& a, const ff::Vec& b) {
  const auto& f = s.field();
  const auto bab = s.b(a, b);
  const auto frac = f.div(f.mul(4, f.mul(bab, bab)), f.mul(s.q(a), s.q(b)));
  return f.add(f.reduce(static_cast<std::int64_t>(s.dim()) - 4), frac);
}

}  // namespace

TEST_SUITE("families") {
  TEST_CASE("root systems: cardinality and norms") {
    const std::vector<std::pair<CoxeterType, unsigned>> cases{
        {CoxeterType::A, 1}, {CoxeterType::A, 4}, {CoxeterType::A, 7}, {CoxeterType::B, 2},
        {CoxeterType::B, 3}, {CoxeterType::B, 6}, {CoxeterType::D, 4}, {CoxeterType::D, 6},
        {CoxeterType::E6, 6}, {CoxeterType::E7, 7}, {CoxeterType::E8, 8}, {CoxeterType::F4, 4}};
    for (const auto& [t, n] : cases) {
      CAPTURE(to_string(t));
      CAPTURE(n);
      const auto r = simple_roots(t, n);
      CHECK(r.simple.size() == n);
      const auto all = root_closure(r);
      CHECK(all.size() == expected_root_count(t, n));
      for (const auto& v : all) {
        const auto nn = idot(v, v);
        CHECK((nn == 8 || nn == 4));
        CHECK(std::find(all.begin(), all.end(), IntVec(v.begin(), v.end())) != all.end());
        IntVec neg = v;
        for (auto& x : neg) x = -x;
        CHECK(std::find(all.begin(), all.end(), neg) != all.end());
      }
    }
    CHECK_THROWS_AS(simple_roots(CoxeterType::E7, 6), DomainError);
    CHECK_THROWS_AS(simple_roots(CoxeterType::D, 2), DomainError);
  }

  TEST_CASE("E8 simple roots give the E8 Cartan matrix") {
    const auto g = gram_times4(simple_roots(CoxeterType::E8, 8));
    // Bourbaki diagram: 1-3-4-5-6-7-8 with 2 attached to 4.
    const std::set<std::pair<int, int>> edges{{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        const bool adj = edges.count({std::min(i, j), std::max(i, j)}) > 0;
        CHECK(g[i][j] == (i == j ? 8 : adj ? -4 : 0));
      }
  }

  TEST_CASE("family spec grammar") {
    const auto a = parse_family_spec("A:n=4,p=7");
    CHECK(a.family == Family::A);
    CHECK(a.n == 4);
    CHECK(a.p == 7);
    const auto h = parse_family_spec("H3:p=11,zeta=4");
    CHECK(h.n == 3);
    CHECK(h.zeta == 4u);
    const auto i = parse_family_spec("I2:p=7,d=8,sign=-");
    CHECK(i.d == 8u);
    CHECK(i.sign == Sign::minus);
    const auto o = parse_family_spec("O2:dim=3,p=5,disc=+");
    CHECK(o.family == Family::O2);
    CHECK(o.disc == SquareClass::square);
    for (const auto& s : {a, h, i, o}) CHECK(parse_family_spec(to_string(s)) == s);
    CHECK_THROWS_AS(parse_family_spec("Q:n=1,p=5"), DomainError);
    CHECK_THROWS_AS(parse_family_spec("A:n=x,p=5"), DomainError);
    CHECK_THROWS_AS(parse_family_spec("A:n=3"), DomainError);
    CHECK_THROWS_AS(parse_family_spec("A n=3 p=5"), DomainError);
    CHECK_THROWS_AS(parse_family_spec("I2:p=5,d=4,sign=?"), DomainError);
  }

  TEST_CASE("admissibility") {
    CHECK_THROWS_AS(check_admissible(parse_family_spec("A:n=4,p=5")), DomainError);
    CHECK_NOTHROW(check_admissible(parse_family_spec("A:n=3,p=5")));
    CHECK_THROWS_AS(check_admissible(parse_family_spec("E6:p=3")), DomainError);
    CHECK_THROWS_AS(check_admissible(parse_family_spec("Abar:n=3,p=7")), DomainError);
    CHECK_THROWS_AS(check_admissible(parse_family_spec("H3:p=7")), DomainError);
    CHECK_THROWS_AS(check_admissible(parse_family_spec("I2:p=7,d=3,sign=-")), DomainError);
    CHECK_THROWS_AS(check_admissible(parse_family_spec("A:n=2,p=9")), DomainError);
    CHECK_THROWS_AS(build_coxeter(Family::A, 4, 5), DomainError);
  }

  TEST_CASE("Coxeter reductions") {
    const auto a = build_coxeter(Family::A, 2, 5);
    CHECK(a.group.order() == 6);
    CHECK(group::meataxe(a.group.generators(), 2, a.space.field()).irreducible);
    const auto b = build_coxeter(Family::B, 3, 5);
    CHECK(b.group.order() == 48);
    CHECK(group::center_contains_minus_id(b.group));
    const auto d = build_coxeter(Family::D, 4, 3);
    CHECK(d.group.order() == 192);
    for (auto [fam, n, p] : {std::tuple{Family::A, 3u, 7u}, {Family::B, 4u, 3u}, {Family::D, 5u, 3u},
                             {Family::F4, 4u, 5u}, {Family::E6, 6u, 5u}}) {
      const auto c = build_coxeter(fam, n, p);
      CAPTURE(label(c.spec));
      CHECK(c.group.order() == *c.expected_order);
      CHECK(c.space.discriminant() == *c.expected_discriminant);
    }
  }

  TEST_CASE("Abar") {
    const auto c = build_abar(3, 5);
    CHECK(c.group.order() == 120);
    CHECK(c.space.discriminant() == SquareClass::square);
    CHECK(group::endo_algebra_dim(c.group.generators(), 3, c.space.field()) == 1);
    const auto r = verify_family(c);
    CHECK(r.passed());
    CHECK(r.irreducible);
    CHECK(build_abar(4, 3).group.order() == 720);
    CHECK_THROWS_AS(build_abar(3, 7), DomainError);
  }

  TEST_CASE("H3 over F_11") {
    CHECK(default_zeta(11) == 4);
    CHECK(h_alpha(11, 4) == 9);
    const auto c = build_h(Family::H3, 11);
    CHECK(c.group.order() == 120);
    const auto& f = c.space.field();
    const auto al = h_alpha(11, 4);
    CHECK(f.add(f.sub(f.mul(al, al), f.mul(3, al)), 1) == 0);
    const auto& g = c.group.generators();
    const ff::Vec a1{al, f.sub(al, 1), f.neg(1)}, a2{f.neg(al), f.sub(al, 1), 1}, a3{1, f.neg(al), f.sub(al, 1)};
    CHECK((g[0] * g[1]).trace() == product_trace(c.space, a1, a2));
    CHECK((g[0] * g[2]).trace() == product_trace(c.space, a1, a3));
    CHECK((g[1] * g[2]).trace() == product_trace(c.space, a2, a3));
    CHECK((g[0] * g[2]).trace() == f.sub(2, al));
    CHECK_THROWS_AS(build_h(Family::H3, 11, 5), DomainError);
  }

  TEST_CASE("H4 orders") {
    CHECK(build_h(Family::H4, 11).group.order() == 14400);
    CHECK(build_h(Family::H3, 19, 9).group.order() == 120);
    CHECK(build_h(Family::H3, 19, 10).group.order() == 120);
  }

  TEST_CASE("realizability of the H families") {
    for (std::uint32_t p = 3; p < 200; p += 2) {
      if (!is_prime(p)) continue;
      CAPTURE(p);
      CHECK(h_realizable(p) == h_alpha_exists(p));
      bool built = true;
      try {
        build_h(Family::H3, p);
      } catch (const DomainError&) {
        built = false;
      }
      CHECK(built == h_realizable(p));
    }
  }

  TEST_CASE("H3 at p = 5 matches O1(3,5)") {
    const auto h = build_h(Family::H3, 5);
    const auto o = build(parse_family_spec("O1:dim=3,p=5"));
    CHECK(h.group.order() == o.group.order());
    CHECK(group::class_fingerprint(h.group) == group::class_fingerprint(o.group));
  }

  TEST_CASE("H3 discriminant conventions at p = 19") {
    const auto a = build_h(Family::H3, 19, 9), b = build_h(Family::H3, 19, 10);
    REQUIRE(a.conventions.size() == 2);
    CHECK(a.conventions[0].value == SquareClass::square);
    CHECK(b.conventions[0].value == SquareClass::square);
    // Simple roots normalized to norm 2: det is (3 - zeta) up to squares.
    const PrimeField f(19);
    CHECK(a.conventions[1].value == f.square_class(f.reduce(3 - 9)));
    CHECK(b.conventions[1].value == f.square_class(f.reduce(3 - 10)));
  }

  TEST_CASE("I2") {
    const auto m = build_i2(7, 8, Sign::minus);
    CHECK(m.group.order() == 16);
    const auto& g = m.group.generators();
    CHECK((g[0] * g[1]).order() == 8);
    const auto pl = build_i2(5, 4, Sign::plus);
    CHECK(pl.group.order() == 8);
    CHECK((pl.group.generators()[0] * pl.group.generators()[1]).order() == 4);
    for (auto [p, d, s] : {std::tuple{11u, 5u, Sign::plus}, {11u, 6u, Sign::minus}, {13u, 7u, Sign::minus},
                           {13u, 12u, Sign::plus}}) {
      const auto c = build_i2(p, d, s);
      CHECK(c.group.order() == 2 * d);
      CHECK(verify_family(c).passed());
    }
    const auto two = build_i2(5, 2, Sign::plus);
    CHECK_FALSE(group::meataxe(two.group.generators(), 2, two.space.field()).irreducible);
    CHECK_THROWS_AS(build_i2(7, 3, Sign::minus), DomainError);
  }

  TEST_CASE("orthogonal groups") {
    CHECK(build(parse_family_spec("O:dim=3,p=3")).group.order() == 48);
    const auto o1 = build(parse_family_spec("O1:dim=3,p=5")), o2 = build(parse_family_spec("O2:dim=3,p=5"));
    CHECK(o1.group.order() == 120);
    CHECK(o2.group.order() == 120);
    CHECK(group::center_contains_minus_id(o1.group));
    CHECK_FALSE(group::center_contains_minus_id(o2.group));
    for (const char* s : {"O:dim=2,p=5,sign=+", "O:dim=2,p=5,sign=-", "O:dim=4,p=3,sign=+", "O:dim=4,p=3,sign=-",
                          "O:dim=3,p=7", "O:dim=3,p=5,disc=-"}) {
      const auto c = build(parse_family_spec(s));
      CAPTURE(s);
      CHECK(c.group.order() == group::closure(c.group.generators()).size());
      CHECK(verify_family(c).passed());
    }
    const auto e1 = build(parse_family_spec("O1:dim=4,p=3,sign=-"));
    const auto e2 = build(parse_family_spec("O2:dim=4,p=3,sign=-"));
    CHECK(e1.group.order() == e2.group.order());
    CHECK(group::class_fingerprint(e1.group) == group::class_fingerprint(e2.group));
    CHECK(orthogonal_order(2, 5, Sign::plus) == 8u);
    CHECK(orthogonal_order(2, 5, Sign::minus) == 12u);
    CHECK_FALSE(orthogonal_order(20, 7, Sign::plus).has_value());
  }

  TEST_CASE("verification catches a corrupted generator") {
    auto c = build_abar(3, 5);
    auto gens = c.group.generators();
    gens[0] = gens[0] * gens[1];
    c.group = group::MatGroup(c.space.field(), 3, gens);
    const auto r = verify_family(c);
    CHECK(r.find("reflections")->status == CheckStatus::fail);
    CHECK_FALSE(r.passed());
  }

  TEST_CASE("twisted forms") {
    const auto c = build_abar(3, 5);
    const auto t = twisted_form(c);
    CHECK(t.space.discriminant() == SquareClass::nonsquare);
    CHECK(t.group.generators() == c.group.generators());
    CHECK_FALSE(quad::is_isometric(c.space, t.space));
    CHECK(verify_family(t).passed());
    for (const auto& g : t.group.generators()) CHECK(t.space.is_isometry(g));
    CHECK_THROWS_AS(twisted_form(build_i2(5, 2, Sign::plus)), DomainError);
  }

  TEST_CASE("rank-2 brute force") {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u})
      for (Sign s : {Sign::plus, Sign::minus}) {
        CAPTURE(p);
        for (const auto& c : classify_rank2_bruteforce(p, s)) {
          CHECK(c.dihedral);
          if (c.irreducible) CHECK(c.divisibility);
          if (c.order == 2) CHECK_FALSE(c.irreducible);
          if (c.irreducible) CHECK(c.d >= 3);
        }
      }
    const auto m3 = classify_rank2_bruteforce(3, Sign::minus);
    CHECK(std::max_element(m3.begin(), m3.end(), [](auto& a, auto& b) { return a.order < b.order; })->order == 8);
    std::set<std::uint64_t> irr;
    for (const auto& c : classify_rank2_bruteforce(5, Sign::plus))
      if (c.irreducible) irr.insert(c.d);
    CHECK(irr == std::set<std::uint64_t>{4});
  }
}
