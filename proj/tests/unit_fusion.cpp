#include <algorithm>
#include <set>

#include "doctest.h"
#include "reflcat/error.hpp"
#include "reflcat/families/build.hpp"
#include "reflcat/fusion/report.hpp"
#include "reflcat/fusion/ring.hpp"

using namespace reflcat;
using namespace reflcat::fusion;
using ff::Matrix;
using ff::PrimeField;

namespace {

CrossedSkeleton family_skeleton(const std::string& spec) {
  const auto c = families::build(families::parse_family_spec(spec));
  return skeleton(MetricGroup(c.space), c.group);
}

bool single(const std::vector<Term>& t, std::size_t label, std::uint64_t mult = 1) {
  return t.size() == 1 && t[0].label == label && t[0].mult == mult;
}

}  // namespace

TEST_SUITE("fusion") {
  TEST_CASE("metric group") {
    const PrimeField f(5);
    const MetricGroup a(quad::QuadraticSpace::standard(f, 3, quad::Variant::plus_type));
    CHECK(a.order() == 125);
    CHECK(a.q({1, 2, 0}) == 0);
    CHECK(a.beta({1, 0, 0}, {1, 0, 0}) == 1);
    CHECK(a.beta({1, 0, 0}, {0, 1, 0}) == 0);
  }

  TEST_CASE("skeleton components") {
    const auto sk = family_skeleton("B:n=3,p=5");
    CHECK(sk.component(0).d == 0);
    CHECK(sk.simple_count(0) == 125);
    std::size_t reflections = 0;
    for (std::size_t g = 1; g < sk.order(); ++g) {
      const auto& c = sk.component(g);
      CHECK(c.d >= 1);
      CHECK(c.image.dim() == c.d);
      if (c.d == 1) {
        ++reflections;
        CHECK(sk.simple_count(g) == 25);
      }
      // det T_g = (-1)^(d_g) for isometries.
      const auto det = sk.group().action(g).det();
      CHECK(det == (c.d % 2 ? 4u : 1u));
    }
    CHECK(reflections == 9);
    CHECK(sk.label_count() == 125 + 9 * 25 + [&] {
            std::uint64_t n = 0;
            for (std::size_t g = 1; g < sk.order(); ++g) n += sk.component(g).d == 2 ? 5 : sk.component(g).d == 3 ? 1 : 0;
            return n;
          }());

    const auto ty = family_skeleton("A:n=1,p=7");
    CHECK(ty.order() == 2);
    CHECK(ty.component(1).d == 1);
    CHECK(ty.simple_count(1) == 1);
  }

  TEST_CASE("skeleton rejects non-isometries") {
    const PrimeField f(5);
    const MetricGroup a(quad::QuadraticSpace::standard(f, 2, quad::Variant::plus_type));
    const group::MatGroup g(f, 2, {Matrix::diagonal(f, {2, 1})});
    CHECK_THROWS_AS(skeleton(a, g), DomainError);
    const group::MatGroup g3(f, 3, {Matrix::scalar(f, 3, 4)});
    CHECK_THROWS_AS(skeleton(a, g3), StructuralError);
  }

  TEST_CASE("trivial component is the group law of A") {
    const auto r = fusion_ring(family_skeleton("A:n=2,p=5"));
    const auto& f = r.skeleton().metric().field();
    for (std::size_t x = r.component_begin(0); x < r.component_end(0); ++x)
      for (std::size_t y = r.component_begin(0); y < r.component_end(0); ++y)
        CHECK(single(r.product(x, y), r.find(0, ff::vec_add(f, r.label(x).coset, r.label(y).coset))));
    CHECK(r.label_name(0) == "g0:(0,0)");
    CHECK(r.dual(0) == 0);
  }

  TEST_CASE("two reflections in the plane multiply to one simple") {
    const auto r = fusion_ring(family_skeleton("I2:p=7,d=8,sign=-"));
    const auto& sk = r.skeleton();
    std::size_t pairs = 0;
    for (std::size_t g = 1; g < sk.order(); ++g)
      for (std::size_t h = 1; h < sk.order(); ++h) {
        if (g == h || sk.component(g).d != 1 || sk.component(h).d != 1) continue;
        CHECK(sk.component(sk.group().mul(g, h)).d == 2);
        for (std::size_t x = r.component_begin(g); x < r.component_end(g); ++x)
          for (std::size_t y = r.component_begin(h); y < r.component_end(h); ++y) {
            const auto t = r.product(x, y);
            REQUIRE(t.size() == 1);
            CHECK(t[0].mult == 1);
          }
        ++pairs;
      }
    CHECK(pairs == 8 * 7);
  }

  TEST_CASE("reflection times itself") {
    // X X* is the sum of the p cosets of the line I_g, each once.
    const auto r = fusion_ring(family_skeleton("A:n=2,p=5"));
    const auto& sk = r.skeleton();
    for (std::size_t g = 1; g < sk.order(); ++g) {
      if (sk.component(g).d != 1) continue;
      const std::size_t x = r.component_begin(g);
      const auto t = r.product(x, r.dual(x));
      CHECK(t.size() == 5);
      for (const auto& term : t) {
        CHECK(term.mult == 1);
        CHECK(r.label(term.label).g == 0);
      }
      CHECK(t.front().label == r.unit());
    }
  }

  TEST_CASE("axiom suite on small skeletons") {
    for (const char* spec : {"A:n=1,p=3", "A:n=1,p=5", "A:n=2,p=5", "A:n=2,p=7", "I2:p=5,d=4,sign=+",
                             "I2:p=5,d=6,sign=-", "I2:p=7,d=8,sign=-", "I2:p=7,d=6,sign=+", "A:n=3,p=3",
                             "O2:dim=3,p=3", "B:n=3,p=3"}) {
      CAPTURE(spec);
      const auto r = fusion_ring(family_skeleton(spec));
      const auto rep = check_axioms(r);
      CHECK(rep.passed());
      for (const auto& res : rep.results) {
        CAPTURE(res.name);
        CAPTURE(res.detail);
        CHECK(res.status == (r.size() <= 200 || res.name != "associativity" ? AxiomStatus::pass : AxiomStatus::skipped));
      }
    }
  }

  TEST_CASE("associativity check is skipped above the limit") {
    const auto r = fusion_ring(family_skeleton("A:n=2,p=5"));
    const auto rep = check_axioms(r, 10);
    CHECK(rep.passed());
    CHECK(rep.results.back().status == AxiomStatus::skipped);
  }

  TEST_CASE("label limit") {
    CHECK_THROWS_AS(fusion_ring(family_skeleton("B:n=3,p=5"), 100), ResourceError);
  }

  TEST_CASE("Tambara-Yamagami rules") {
    for (const char* spec : {"A:n=1,p=3", "A:n=1,p=5", "A:n=1,p=7"}) {
      CAPTURE(spec);
      const auto r = fusion_ring(family_skeleton(spec));
      CHECK(matches_tambara_yamagami(r));
      const std::uint32_t p = r.skeleton().metric().p();
      const std::size_t x = r.component_begin(1);
      CHECK(r.size() == p + 1);
      CHECK(r.fp_dim_squared(x) == p);
      CHECK(r.dual(x) == x);
      CHECK(r.product(x, x).size() == p);
    }
    CHECK_FALSE(matches_tambara_yamagami(fusion_ring(family_skeleton("A:n=2,p=5"))));
  }

  TEST_CASE("reflection skeleton criterion") {
    for (const char* spec : {"A:n=3,p=5", "Abar:n=3,p=5", "I2:p=7,d=4,sign=-", "O2:dim=3,p=5", "H3:p=11"}) {
      CAPTURE(spec);
      const auto c = is_reflection_skeleton(family_skeleton(spec));
      CHECK(c.ok);
      CHECK_FALSE(c.witness.has_value());
    }
    const PrimeField f(5);
    const MetricGroup a3(quad::QuadraticSpace::standard(f, 3, quad::Variant::plus_type));
    const auto minus = skeleton(a3, group::MatGroup(f, 3, {Matrix::scalar(f, 3, 4)}));
    const auto c = is_reflection_skeleton(minus);
    CHECK_FALSE(c.ok);
    REQUIRE(c.witness.has_value());
    CHECK(minus.group().element(*c.witness) == Matrix::scalar(f, 3, 4));
    CHECK(minus.component(1).d == 3);

    // C_4 acting on F_5 through its quotient of order 2.
    const MetricGroup a1(quad::QuadraticSpace::standard(f, 1, quad::Variant::plus_type));
    std::vector<Matrix> els, act;
    for (ff::Residue k = 0; k < 4; ++k) {
      els.push_back(Matrix::scalar(f, 1, f.pow(2, k)));
      act.push_back(Matrix::scalar(f, 1, k % 2 ? 4 : 1));
    }
    const auto sk = skeleton(a1, cohomology::GModule(els, act));
    const auto strict = is_reflection_skeleton(sk);
    CHECK_FALSE(strict.ok);
    REQUIRE(strict.witness.has_value());
    CHECK(sk.component(*strict.witness).d == 0);
    const auto gen = is_reflection_skeleton(sk, true);
    CHECK(gen.ok);
    CHECK(gen.image_order == 2);
    CHECK(check_axioms(fusion_ring(sk)).passed());
  }

  TEST_CASE("irreducible skeletons") {
    CHECK(is_irreducible_skeleton(family_skeleton("Abar:n=3,p=5")));
    CHECK(is_irreducible_skeleton(family_skeleton("O1:dim=3,p=7")));
    CHECK_FALSE(is_irreducible_skeleton(family_skeleton("I2:p=5,d=2,sign=+")));
    const PrimeField f(7);
    const MetricGroup a(quad::QuadraticSpace::standard(f, 2, quad::Variant::plus_type));
    CHECK_FALSE(is_irreducible_skeleton(skeleton(a, group::MatGroup(f, 2, {}))));
  }

  TEST_CASE("classification rows at p = 5") {
    const auto rows = classification_report(5, 3);
    std::vector<std::string> groups;
    for (const auto& r : rows) groups.push_back(r.group);
    CHECK(groups == std::vector<std::string>{"A(1,5)", "A(2,5)", "A(3,5)", "B(3,5)", "I2(5;d=4,+)", "I2(5;d=3,-)",
                                             "I2(5;d=6,-)", "Abar(3,5)", "O(3,5)", "O1(3,5)", "O2(3,5)"});
    for (const auto& r : rows) {
      CAPTURE(r.group);
      CHECK(r.status == "verified");
      CHECK(r.irreducible == "yes");
      CHECK(r.order == formula_order(r.spec));
      CHECK(r.extensions == (r.group == "O2(3,5)" ? "torsor over F_5" : "unique up to twisting"));
      CHECK(r.h2 == (r.group == "O2(3,5)" ? "F_5" : "0"));
      CHECK(r.h2_computed.value == "0");
    }
  }

  TEST_CASE("classification rows elsewhere") {
    auto has = [](const std::vector<families::FamilySpec>& v, const std::string& l) {
      return std::any_of(v.begin(), v.end(), [&](const auto& s) { return families::label(s) == l; });
    };
    const auto p7 = classification_specs(7, 3);
    CHECK_FALSE(has(p7, "H3(7)"));
    CHECK(has(p7, "I2(7;d=8,-)"));
    CHECK_FALSE(has(p7, "Abar(3,7)"));
    const auto p11 = classification_specs(11, 4);
    CHECK(std::any_of(p11.begin(), p11.end(), [](const auto& s) { return s.family == families::Family::H3; }));
    CHECK(std::any_of(p11.begin(), p11.end(), [](const auto& s) { return s.family == families::Family::H4; }));
    CHECK(has(classification_specs(3, 3), "A(1,3)"));
    CHECK_FALSE(has(classification_specs(3, 3), "A(2,3)"));

    const auto rows = classification_report(3, 8, Tier::fast);
    std::set<std::string> unresolved;
    for (const auto& r : rows) {
      if (r.dim > 3) CHECK(r.status != "verified");
      if (r.status == "unresolved") unresolved.insert(r.group);
    }
    CHECK(unresolved == std::set<std::string>{"O2(5,3)", "O2(7,3)", "O2-(8,3)"});
    CHECK_THROWS_AS(classification_report(9, 3), DomainError);
  }

  TEST_CASE("formula orders") {
    CHECK(formula_order(families::parse_family_spec("E8:p=7")) == 696729600);
    CHECK(formula_order(families::parse_family_spec("Abar:n=3,p=5")) == 120);
    CHECK(formula_order(families::parse_family_spec("O:dim=3,p=3")) == 48);
    CHECK(formula_order(families::parse_family_spec("O2:dim=3,p=5")) == 120);
    CHECK(formula_order(families::parse_family_spec("I2:p=7,d=8,sign=-")) == 16);
    CHECK(formula_order(families::parse_family_spec("D:n=4,p=5")) == 192);
  }
}
