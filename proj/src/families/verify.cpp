#include "reflcat/families/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "reflcat/error.hpp"
#include "reflcat/group/meataxe.hpp"
#include "reflcat/group/reflections.hpp"

namespace reflcat::families {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    default:
      return "skipped";
  }
}

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::fail; });
}

const Check* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

constexpr std::uint64_t kOracleLimit = 20000;

std::string class_name(SquareClass c) { return c == SquareClass::square ? "square" : "nonsquare"; }

CheckStatus status(bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; }

}  // namespace

VerificationReport verify_family(const ConstructedGroup& c, std::uint64_t seed) {
  VerificationReport r;
  r.label = label(c.spec);
  const auto& f = c.space.field();
  const std::size_t n = c.space.dim();
  const auto& gens = c.group.generators();

  std::size_t bad = 0;
  for (const auto& g : gens)
    if (!group::is_reflection(c.space, g)) ++bad;
  r.checks.push_back({"reflections", status(bad == 0 && !gens.empty()),
                      std::to_string(gens.size() - bad) + "/" + std::to_string(gens.size()) +
                          " generators are reflective isometries"});

  const auto irr = group::meataxe(gens, n, f, seed);
  r.irreducible = irr.irreducible;
  r.endo_dim = group::endo_algebra_dim(gens, n, f);
  r.checks.push_back({"irreducible", status(irr.irreducible),
                      irr.irreducible ? "irreducible, dim End = " + std::to_string(r.endo_dim)
                                      : "invariant subspace of dim " + std::to_string(irr.invariant_subspace->dim())});

  r.order = c.group.order();
  if (c.expected_order)
    r.checks.push_back({"order", status(r.order == *c.expected_order),
                        std::to_string(r.order) + " vs expected " + std::to_string(*c.expected_order)});
  else
    r.checks.push_back({"order", CheckStatus::skipped, std::to_string(r.order) + ", no closed formula"});

  if (r.order <= kOracleLimit) {
    const auto els = group::closure(gens, kOracleLimit + 1);
    r.checks.push_back({"order_oracle", status(els.size() == r.order),
                        "closure has " + std::to_string(els.size()) + " elements"});
  } else {
    r.checks.push_back({"order_oracle", CheckStatus::skipped, "group larger than " + std::to_string(kOracleLimit)});
  }

  r.discriminant = c.space.discriminant();
  if (c.expected_discriminant) {
    r.checks.push_back({"discriminant", status(r.discriminant == *c.expected_discriminant),
                        class_name(r.discriminant) + " vs expected " + class_name(*c.expected_discriminant)});
  } else {
    std::string d = class_name(r.discriminant) + ", no expected class";
    for (const auto& conv : c.conventions)
      d += "; " + conv.name + ": " + (conv.value ? class_name(*conv.value) : std::string("degenerate"));
    r.checks.push_back({"discriminant", CheckStatus::skipped, d});
  }

  if (quad::vector_count(f.p(), n)) {
    group::MatGroup h(f, n, {});
    std::size_t inside = 0;
    for (const auto& m : group::reflections_in(c.space, group::AxisFilter::all)) {
      if (!c.group.contains(m)) continue;
      ++inside;
      if (!h.contains(m)) h = h.with_generator(m);
    }
    r.checks.push_back({"reflection_closure", status(h.order() == r.order),
                        std::to_string(inside) + " reflections in the group generate order " +
                            std::to_string(h.order())});
  } else {
    r.checks.push_back({"reflection_closure", CheckStatus::skipped, "space too large to enumerate reflections"});
  }
  return r;
}

std::vector<Rank2Class> classify_rank2_bruteforce(std::uint32_t p, Sign sign) {
  if (p > 13) throw ResourceError("rank-2 brute force is limited to p <= 13");
  const ff::PrimeField f(p);
  const auto space = sign == Sign::plus ? QuadraticSpace::hyperbolic_plane(f) : QuadraticSpace::anisotropic_plane(f);
  const auto refl = group::reflections_in(space, group::AxisFilter::all);

  using ElementSet = std::set<Matrix>;
  std::map<ElementSet, std::vector<Matrix>> found;  // element set -> generating reflections
  std::vector<ElementSet> queue;
  for (const auto& r : refl) {
    auto els = group::closure({r});
    ElementSet s(els.begin(), els.end());
    if (found.emplace(s, std::vector<Matrix>{r}).second) queue.push_back(s);
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto gens = found.at(queue[i]);
    for (const auto& r : refl) {
      if (queue[i].count(r)) continue;
      auto more = gens;
      more.push_back(r);
      auto els = group::closure(more);
      ElementSet s(els.begin(), els.end());
      if (found.emplace(s, more).second) queue.push_back(s);
    }
  }

  std::map<std::pair<std::uint64_t, bool>, Rank2Class> classes;
  for (const auto& [els, gens] : found) {
    Rank2Class c;
    c.order = els.size();
    c.irreducible = group::meataxe(gens, 2, f).irreducible;
    // Dihedral of order 2d: a cyclic rotation subgroup of index 2 and
    // involutions elsewhere.
    std::uint64_t rotations = 0, max_rot = 1;
    bool others_involutions = true;
    for (const auto& m : els) {
      if (m.det() == 1) {
        ++rotations;
        max_rot = std::max<std::uint64_t>(max_rot, m.order());
      } else if (!(m * m).is_identity()) {
        others_involutions = false;
      }
    }
    c.dihedral = 2 * rotations == c.order && max_rot == rotations && others_involutions;
    c.d = c.dihedral ? rotations : 0;
    c.divisibility = c.dihedral && ((sign == Sign::plus ? p - 1 : p + 1) % c.d == 0);
    auto [it, fresh] = classes.emplace(std::pair{c.order, c.irreducible}, c);
    ++it->second.subgroups;
  }
  std::vector<Rank2Class> out;
  for (const auto& [k, v] : classes) out.push_back(v);
  return out;
}

}  // namespace reflcat::families
