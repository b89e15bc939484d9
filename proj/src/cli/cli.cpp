#include "reflcat/cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "reflcat/cli/tables.hpp"
#include "reflcat/cohomology/bar.hpp"
#include "reflcat/cohomology/cup.hpp"
#include "reflcat/cohomology/cyclic.hpp"
#include "reflcat/cohomology/stable.hpp"
#include "reflcat/error.hpp"
#include "reflcat/families/build.hpp"
#include "reflcat/families/verify.hpp"
#include "reflcat/ff/linalg.hpp"
#include "reflcat/fusion/ring.hpp"

namespace reflcat::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string format = "json";
  std::uint64_t seed = 0;
  std::uint64_t memory_budget = cohomology::kDefaultMemoryBudget;
  std::string tier = "fast";
  std::string method = "auto";
  bool generalized = false;
  bool timing = false;

  std::string spec;
  std::uint32_t p = 0;
  unsigned dim = 0;
  std::string variant = "plus";
  ff::Residue twist = 1;
  std::string sign = "+";
  unsigned degree = 2;
  std::string module = "natural";
  std::uint64_t label_limit = 2000;
  std::size_t associativity_limit = 200;
  std::string table;
  std::string primes;
  unsigned max_dim = 3;
};

struct Report {
  json inputs = json::object();
  json results = json::object();
  json provenance = json::object();
  bool ok = true;
  std::optional<Table> table;
};

json to_json(const ff::Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(std::move(r));
  }
  return rows;
}

fusion::Tier tier_of(const Options& o) { return *fusion::tier_from_string(o.tier); }

families::ConstructedGroup build_spec(const Options& o) { return families::build(families::parse_family_spec(o.spec)); }

Report cmd_qspace(const Options& o) {
  Report r;
  if (o.p < 3 || !ff::is_prime(o.p)) throw DomainError("p must be an odd prime");
  if (o.dim == 0) throw DomainError("--dim must be positive");
  const ff::PrimeField f(o.p);
  const auto v = o.variant == "plus" ? quad::Variant::plus_type : quad::Variant::minus_type;
  const auto s = quad::QuadraticSpace::standard(f, o.dim, v).twist(f.reduce(o.twist));
  r.inputs = {{"p", o.p}, {"dim", o.dim}, {"variant", o.variant}, {"twist", o.twist}};
  const auto w = quad::witt_decompose(s);
  const auto plus = quad::QuadraticSpace::standard(f, o.dim, quad::Variant::plus_type);
  r.results = {{"gram", to_json(s.gram())},
               {"det", s.det()},
               {"discriminant", ff::to_string(s.discriminant())},
               {"witt", {{"sign", quad::to_string(w.sign)},
                         {"hyperbolic_pairs", w.pairs.size()},
                         {"anisotropic_dim", w.anisotropic.size()}}},
               {"isometric_to_plus_type", quad::is_isometric(s, plus)}};
  r.provenance = {{"witt", "exhaustive isotropic search"}, {"isometry", "dimension and discriminant"}};
  return r;
}

Report cmd_build(const Options& o) {
  Report r;
  const auto c = build_spec(o);
  r.inputs = {{"spec", o.spec}};
  json gens = json::array();
  for (const auto& g : c.group.generators()) gens.push_back(to_json(g));
  json conv = json::array();
  for (const auto& cv : c.conventions)
    conv.push_back({{"name", cv.name}, {"discriminant", cv.value ? json(ff::to_string(*cv.value)) : json(nullptr)}});
  r.results = {{"label", families::label(c.spec)},
               {"spec", families::to_string(c.spec)},
               {"dim", c.space.dim()},
               {"gram", to_json(c.space.gram())},
               {"discriminant", ff::to_string(c.space.discriminant())},
               {"generators", gens},
               {"order", c.group.order()},
               {"expected_order", c.expected_order ? json(*c.expected_order) : json(nullptr)},
               {"conventions", conv}};
  r.provenance = {{"order", "stabilizer chain"}, {"expected_order", "closed formula"}};
  if (c.expected_order && *c.expected_order != c.group.order()) r.ok = false;
  return r;
}

Report cmd_verify(const Options& o) {
  Report r;
  const auto c = build_spec(o);
  const auto v = families::verify_family(c, o.seed);
  r.inputs = {{"spec", o.spec}, {"seed", o.seed}};
  json checks = json::array();
  for (const auto& ch : v.checks)
    checks.push_back({{"name", ch.name}, {"status", families::to_string(ch.status)}, {"detail", ch.detail}});
  r.results = {{"label", v.label},
               {"order", v.order},
               {"discriminant", ff::to_string(v.discriminant)},
               {"irreducible", v.irreducible},
               {"endo_dim", v.endo_dim},
               {"checks", checks}};
  r.provenance = {{"order", "stabilizer chain"},
                  {"order_oracle", "closure by breadth-first multiplication"},
                  {"irreducible", "meataxe with endomorphism algebra dimension"}};
  r.ok = v.passed();
  return r;
}

Report cmd_rank2(const Options& o) {
  Report r;
  const auto sign = o.sign == "+" ? families::Sign::plus : families::Sign::minus;
  r.inputs = {{"p", o.p}, {"sign", o.sign}};
  json classes = json::array();
  bool ok = true;
  for (const auto& c : families::classify_rank2_bruteforce(o.p, sign)) {
    classes.push_back({{"order", c.order},
                       {"irreducible", c.irreducible},
                       {"dihedral", c.dihedral},
                       {"d", c.d},
                       {"divides", c.divisibility},
                       {"subgroups", c.subgroups}});
    if (c.irreducible && !(c.dihedral && c.divisibility)) ok = false;
  }
  r.results = {{"classes", classes}, {"irreducible_are_dihedral_with_divisibility", ok}};
  r.provenance = {{"classes", "exhaustive enumeration of reflection-generated subgroups"}};
  r.ok = ok;
  return r;
}

std::optional<std::size_t> cyclic_generator(const cohomology::GModule& m) {
  for (std::size_t g = 0; g < m.order(); ++g)
    if (m.element_order(g) == m.order()) return g;
  return std::nullopt;
}

Report cmd_cohomology(const Options& o) {
  Report r;
  const auto c = build_spec(o);
  const auto m = o.module == "natural" ? cohomology::GModule::natural(c.group) : cohomology::GModule::trivial(c.group, 1);
  r.inputs = {{"spec", o.spec}, {"degree", o.degree}, {"method", o.method}, {"module", o.module}};
  const std::uint32_t p = c.space.p();
  std::string method = o.method;
  if (method == "auto") {
    if (o.degree > 0 && m.order() % p != 0)
      method = "coprime";
    else if (cyclic_generator(m))
      method = "cyclic";
    else if (o.degree == 2 && cohomology::p_part(m.order(), p) <= p)
      method = "stable";
    else
      method = "bar";
  }
  std::size_t dim = 0;
  json extra = json::object();
  if (method == "coprime") {
    dim = 0;
  } else if (method == "cyclic") {
    const auto g = cyclic_generator(m);
    if (!g) throw DomainError("the group is not cyclic");
    dim = cohomology::cyclic_h_n(m.action(*g), o.degree, m.order()).dim;
  } else if (method == "stable") {
    if (o.degree != 2) throw DomainError("stable elements are implemented for degree 2");
    const auto s = cohomology::h2_stable_elements(m);
    dim = s.dim;
    extra = {{"sylow_order", s.sylow_order}, {"conjugators_checked", s.conjugators_checked}};
  } else {
    const auto b = cohomology::bar_h_n(m, o.degree, false, o.memory_budget);
    dim = b.dim;
    extra = {{"estimated_bytes", b.estimated_bytes}};
  }
  r.results = {{"group_order", m.order()}, {"dim", dim}, {"method", method}, {"details", extra}};
  r.provenance = {{"dim", method}};
  return r;
}

Report cmd_obstruction(const Options& o) {
  Report r;
  const auto c = build_spec(o);
  const auto m = cohomology::GModule::natural(c.group);
  r.inputs = {{"spec", o.spec}};
  const auto st = cohomology::h2_stable_elements(m);
  const auto beta = cohomology::beta_from_q(c.space);
  const auto sylow = cohomology::cyclic_subgroup(m, st.sylow_generator);
  const auto sm = m.restrict_to(sylow);
  const std::size_t gen = sm.index(m.element(st.sylow_generator));
  auto square_vanishes = [&](const ff::Vec& v) {
    const auto l = cohomology::cyclic_cocycle(sm, gen, v);
    return cohomology::is_coboundary(sm.trivial_companion(), cohomology::cup_square(sm, l, beta), o.memory_budget);
  };
  json classes = json::array();
  for (const auto& v : st.stable_vectors)
    classes.push_back({{"vector", v}, {"square", square_vanishes(v) ? "vanishes" : "indeterminate"}});
  json sylow_classes = json::array();
  bool form_vanishes = true;
  if (st.sylow_order > 1) {
    const auto h = cohomology::cyclic_h_n(sm.action(gen), 2, sm.order());
    for (const auto& v : h.representatives)
      sylow_classes.push_back({{"vector", v}, {"square", square_vanishes(v) ? "vanishes" : "indeterminate"}});
    const auto fixed = ff::kernel_basis(sm.action(gen) - ff::Matrix::identity(c.space.field(), c.space.dim()));
    for (const auto& x : fixed)
      for (const auto& y : fixed)
        if (c.space.b(x, y) != 0) form_vanishes = false;
  }
  r.results = {{"h2_dim", st.dim},
               {"sylow_order", st.sylow_order},
               {"classes", classes},
               {"sylow_classes", sylow_classes},
               {"form_vanishes_on_fixed_space", form_vanishes}};
  r.provenance = {{"h2_dim", "stable elements"},
                  {"square", "cup square on the Sylow subgroup in Z/p coefficients, coboundary test by bar complex"}};
  return r;
}

Report cmd_fusion(const Options& o) {
  Report r;
  const auto c = build_spec(o);
  const auto sk = fusion::skeleton(fusion::MetricGroup(c.space), c.group);
  const auto ring = fusion::fusion_ring(sk, o.label_limit);
  r.inputs = {{"spec", o.spec}, {"generalized", o.generalized}};
  json labels = json::array(), dual = json::array(), constants = json::array();
  for (std::size_t x = 0; x < ring.size(); ++x) {
    labels.push_back(ring.label_name(x));
    dual.push_back(ring.dual(x));
    for (std::size_t y = 0; y < ring.size(); ++y)
      for (const auto& t : ring.product(x, y)) constants.push_back({x, y, t.label, t.mult});
  }
  const auto axioms = fusion::check_axioms(ring, o.associativity_limit);
  json ax = json::object();
  for (const auto& a : axioms.results) ax[a.name] = {{"status", fusion::to_string(a.status)}, {"detail", a.detail}};
  const auto refl = fusion::is_reflection_skeleton(sk, o.generalized);
  r.results = {{"ring", {{"labels", labels}, {"unit", ring.unit()}, {"dual", dual}, {"constants", constants}}},
               {"axioms", ax},
               {"reflection_category", refl.ok},
               {"reflection_witness", refl.witness ? json(*refl.witness) : json(nullptr)},
               {"reflection_reason", refl.reason},
               {"image_order", refl.image_order},
               {"irreducible", fusion::is_irreducible_skeleton(sk, o.seed)},
               {"tambara_yamagami", fusion::matches_tambara_yamagami(ring)}};
  r.provenance = {{"constants", "coset formula on the crossed skeleton"}};
  r.ok = axioms.passed() && refl.ok;
  return r;
}

Report cmd_tables(const Options& o) {
  Report r;
  const auto kind = table_from_string(o.table);
  if (!kind) throw DomainError("unknown table '" + o.table + "'");
  const auto primes = parse_primes(o.primes);
  r.inputs = {{"table", o.table}, {"p", o.primes}, {"max_dim", o.max_dim}, {"tier", o.tier}};
  r.table = make_table(*kind, primes, o.max_dim, tier_of(o), o.seed);
  r.results = to_json(*r.table);
  for (const auto& row : r.table->rows)
    if (!row.empty() && row.back() == "failed") r.ok = false;
  return r;
}

std::string scalar_text(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void flatten(const json& j, const std::string& path, std::string& out) {
  const bool scalars = j.is_array() && std::all_of(j.begin(), j.end(), [](const json& e) { return !e.is_structured(); });
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array() && !scalars) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out += "- " + path + ": " + scalar_text(j) + "\n";
  }
}

std::string render(const std::string& verb, const Report& r, const Options& o, std::optional<double> seconds) {
  if (o.format == "md") {
    if (r.table) return to_markdown(*r.table);
    std::string s = "# " + verb + "\n\n";
    flatten(r.inputs, "inputs", s);
    flatten(r.results, "results", s);
    flatten(r.provenance, "provenance", s);
    s += std::string("- status: ") + (r.ok ? "pass" : "fail") + "\n";
    return s;
  }
  json j = {{"schema", kSchemaVersion},
            {"command", verb},
            {"inputs", r.inputs},
            {"results", r.results},
            {"provenance", r.provenance},
            {"status", r.ok ? "pass" : "fail"}};
  if (seconds) j["timing_seconds"] = *seconds;
  return j.dump(2) + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orthogonal reflection groups over F_p, their cohomology and fusion skeletons"};
  app.name("reflcat");
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "md"}));
  app.add_option("--seed", o.seed, "Random seed");
  app.add_option("--memory-budget", o.memory_budget, "Memory budget in bytes for cohomology");
  app.add_option("--tier", o.tier, "Verification tier")->check(CLI::IsMember({"fast", "full", "stretch"}));
  app.add_option("--method", o.method, "Cohomology method")
      ->check(CLI::IsMember({"bar", "cyclic", "stable", "auto"}));
  app.add_flag("--generalized", o.generalized, "Allow a non-injective action on A");
  app.add_flag("--timing", o.timing, "Add elapsed time to JSON reports");

  std::map<std::string, std::function<Report(const Options&)>> handlers;
  auto with_spec = [&](const std::string& name, const std::string& desc, std::function<Report(const Options&)> h) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("spec", o.spec, "Family spec, e.g. H3:p=11,zeta=4")->required();
    handlers[name] = std::move(h);
    return sub;
  };

  auto* qs = app.add_subcommand("qspace", "Standard quadratic space invariants");
  qs->add_option("--p", o.p, "Odd prime")->required();
  qs->add_option("--dim", o.dim, "Dimension")->required();
  qs->add_option("--variant", o.variant, "Discriminant type")->check(CLI::IsMember({"plus", "minus"}));
  qs->add_option("--twist", o.twist, "Scale Q by this nonzero residue");
  handlers["qspace"] = cmd_qspace;

  with_spec("build", "Construct a reflection group", cmd_build);
  with_spec("verify", "Construct and verify a reflection group", cmd_verify);

  auto* r2 = app.add_subcommand("rank2", "Enumerate reflection subgroups of a plane");
  r2->add_option("--p", o.p, "Odd prime")->required()->check(CLI::Range(3u, 13u));
  r2->add_option("--sign", o.sign, "+ hyperbolic, - anisotropic")->check(CLI::IsMember({"+", "-"}));
  handlers["rank2"] = cmd_rank2;

  auto* co = with_spec("cohomology", "H^n(G, V)", cmd_cohomology);
  co->add_option("--degree", o.degree, "Cohomological degree");
  co->add_option("--module", o.module, "Coefficients")->check(CLI::IsMember({"natural", "trivial"}));

  with_spec("obstruction", "Squaring obstruction of H^2(G, V) classes", cmd_obstruction);

  auto* fu = with_spec("fusion", "Fusion ring of the crossed skeleton", cmd_fusion);
  fu->add_option("--label-limit", o.label_limit, "Refuse rings with more labels");
  fu->add_option("--associativity-limit", o.associativity_limit, "Exhaustive associativity up to this many labels");

  auto* tb = app.add_subcommand("tables", "Reproduce classification tables");
  tb->add_option("--table", o.table, "Table")->required()->check(CLI::IsMember({"coxeter", "classification", "h2", "families"}));
  tb->add_option("--p", o.primes, "Prime or range lo..hi")->required();
  tb->add_option("--max-dim", o.max_dim, "Largest dimension")->check(CLI::Range(1u, 8u));
  handlers["tables"] = cmd_tables;

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    const auto t0 = std::chrono::steady_clock::now();
    const Report r = handlers.at(verb)(o);
    std::optional<double> seconds;
    if (o.timing) seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out << render(verb, r, o, seconds);
    return r.ok ? kOk : kCheckFailed;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const StructuralError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace reflcat::cli
