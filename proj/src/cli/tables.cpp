#include "reflcat/cli/tables.hpp"

#include <charconv>

#include "reflcat/error.hpp"
#include "reflcat/families/build.hpp"
#include "reflcat/families/verify.hpp"
#include "reflcat/ff/field.hpp"

namespace reflcat::cli {

using families::Family;
using families::FamilySpec;
using families::Sign;
using fusion::Tier;

std::optional<TableKind> table_from_string(std::string_view s) {
  if (s == "coxeter") return TableKind::coxeter;
  if (s == "classification") return TableKind::classification;
  if (s == "h2") return TableKind::h2;
  if (s == "families") return TableKind::families;
  return std::nullopt;
}

namespace {

std::uint32_t parse_u32(std::string_view s) {
  std::uint32_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw DomainError("expected a positive integer, got '" + std::string(s) + "'");
  return v;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string order_cell(const std::optional<std::uint64_t>& order, const std::string& source) {
  if (!order) return "overflow (" + source + ")";
  return std::to_string(*order) + " (" + source + ")";
}

// Built-and-verified order when the tier allows it, otherwise the formula.
std::pair<std::string, std::string> order_and_status(const FamilySpec& s, Tier tier, std::uint64_t seed) {
  if (!fusion::tier_builds(tier, s.n, s.p)) return {order_cell(fusion::formula_order(s), "formula"), "formula-only"};
  const auto c = families::build(s);
  const auto v = families::verify_family(c, seed);
  const auto* oracle = v.find("order_oracle");
  const std::string src = oracle && oracle->status == families::CheckStatus::pass ? "closure" : "chain";
  return {order_cell(v.order, src), v.passed() ? "verified" : "failed"};
}

}  // namespace

std::vector<std::uint32_t> parse_primes(std::string_view text) {
  std::uint32_t lo = 0, hi = 0;
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    lo = parse_u32(text.substr(0, dots));
    hi = parse_u32(text.substr(dots + 2));
  } else {
    lo = hi = parse_u32(text);
    if (lo < 3 || !ff::is_prime(lo)) throw DomainError("p must be an odd prime, got " + std::string(text));
  }
  if (lo > hi) throw DomainError("empty prime range '" + std::string(text) + "'");
  if (hi > 1000) throw DomainError("prime range above 1000");
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = std::max<std::uint32_t>(lo, 3); p <= hi; ++p)
    if (ff::is_prime(p)) out.push_back(p);
  if (out.empty()) throw DomainError("no odd prime in '" + std::string(text) + "'");
  return out;
}

Table classification_table(std::uint32_t p, unsigned max_dim, Tier tier, std::uint64_t seed) {
  Table t;
  t.title = "Irreducible reflection fusion categories up to twisting, p = " + std::to_string(p) +
            ", dim <= " + std::to_string(max_dim);
  t.columns = {"G", "dim", "order", "irreducible", "H^2(G,V)", "H^2 computed", "extensions", "status"};
  for (const auto& r : fusion::classification_report(p, max_dim, tier, seed)) {
    std::string computed = r.h2_computed.value;
    if (!r.h2_computed.method.empty()) computed += " (" + r.h2_computed.method + ")";
    t.rows.push_back({r.group, std::to_string(r.dim), order_cell(r.order, r.order_source), r.irreducible, r.h2,
                      computed, r.extensions, r.status});
  }
  t.notes = {"H^2(G,V) is the tabulated value; H^2 computed uses coprimality, a central -id, or stable elements "
             "on a cyclic Sylow subgroup.",
             "Extensions are counted up to twisting by H^3(G, k^x).",
             "status is the outcome of building and verifying the group."};
  return t;
}

Table coxeter_table(const std::vector<std::uint32_t>& primes, unsigned max_dim, Tier tier, std::uint64_t seed) {
  Table t;
  t.title = "Irreducible Coxeter reflection groups, dim <= " + std::to_string(max_dim);
  t.columns = {"G", "p", "dim", "condition", "holds", "order", "status"};
  for (const std::uint32_t p : primes) {
    auto row = [&](FamilySpec s, const std::string& cond, bool holds) {
      std::vector<std::string> r{families::label(s), std::to_string(p), std::to_string(s.n), cond, yes_no(holds)};
      if (holds) {
        auto [order, status] = order_and_status(s, tier, seed);
        r.push_back(order);
        r.push_back(status);
      } else {
        r.push_back("-");
        r.push_back("rejected");
      }
      t.rows.push_back(std::move(r));
    };
    using families::make_spec;
    for (unsigned n = 1; n <= max_dim; ++n) row(make_spec(Family::A, n, p), "p does not divide n+1", (n + 1) % p != 0);
    for (unsigned n = 3; n <= max_dim; ++n) row(make_spec(Family::B, n, p), "n >= 3", true);
    for (unsigned n = 4; n <= max_dim; ++n) row(make_spec(Family::D, n, p), "n >= 4", true);
    if (max_dim >= 6) row(make_spec(Family::E6, 6, p), "p != 3", p != 3);
    if (max_dim >= 7) row(make_spec(Family::E7, 7, p), "-", true);
    if (max_dim >= 8) row(make_spec(Family::E8, 8, p), "-", true);
    if (max_dim >= 4) row(make_spec(Family::F4, 4, p), "-", true);
    const bool h = p > 5 && (std::uint64_t{p} * p - 1) % 5 == 0;
    if (max_dim >= 3) row(make_spec(Family::H3, 3, p), "p > 5, p^2 = 1 mod 5", h);
    if (max_dim >= 4) row(make_spec(Family::H4, 4, p), "p > 5, p^2 = 1 mod 5", h);
    if (max_dim >= 2)
      for (Sign sign : {Sign::plus, Sign::minus}) {
        const std::uint32_t m = sign == Sign::plus ? p - 1 : p + 1;
        for (unsigned d = 3; d <= m; ++d)
          if (m % d == 0) {
            auto s = make_spec(Family::I2, 2, p);
            s.d = d;
            s.sign = sign;
            row(s, sign == Sign::plus ? "d | p-1, hyperbolic" : "d | p+1, anisotropic", true);
          }
      }
  }
  return t;
}

Table h2_table(const std::vector<std::uint32_t>& primes, Tier tier) {
  Table t;
  t.title = "Irreducible reflection groups with non-trivial H^2(G,V)";
  t.columns = {"G", "p", "H^2(G,V)", "computed", "method", "status"};
  for (const std::uint32_t p : primes) {
    std::vector<FamilySpec> specs;
    if (p > 3) {
      specs.push_back(families::make_spec(Family::O2, 3, p));
    } else {
      specs.push_back(families::make_spec(Family::O2, 5, 3));
      specs.push_back(families::make_spec(Family::O2, 7, 3));
      auto s = families::make_spec(Family::O2, 8, 3);
      s.sign = Sign::minus;
      specs.push_back(s);
    }
    for (const auto& s : specs) {
      const std::string tab = fusion::h2_tabulated(s);
      fusion::H2Computation c{"-", "tier " + std::string(fusion::to_string(tier))};
      if (fusion::tier_builds(tier, s.n, p)) c = fusion::compute_h2(s);
      std::string status;
      if (c.value == "-")
        status = fusion::h2_unresolved(s) ? "unresolved" : "formula-only";
      else
        status = c.value == tab ? "verified" : "unresolved";
      t.rows.push_back({families::label(s), std::to_string(p), tab, c.value, c.method, status});
    }
  }
  t.notes = {"A computed value that differs from the tabulated one leaves the row unresolved."};
  return t;
}

Table families_table(const std::vector<std::uint32_t>& primes, unsigned max_dim) {
  Table t;
  t.title = "Family admissibility, dim <= " + std::to_string(max_dim);
  t.columns = {"spec", "accepted", "reason"};
  for (const std::uint32_t p : primes) {
    std::vector<FamilySpec> specs;
    using families::make_spec;
    for (unsigned n = 1; n <= max_dim; ++n) specs.push_back(make_spec(Family::A, n, p));
    for (unsigned n = 3; n <= max_dim; ++n) specs.push_back(make_spec(Family::Abar, n, p));
    if (max_dim >= 3) specs.push_back(make_spec(Family::H3, 3, p));
    if (max_dim >= 4) specs.push_back(make_spec(Family::H4, 4, p));
    if (max_dim >= 6) specs.push_back(make_spec(Family::E6, 6, p));
    for (const auto& s : specs) {
      std::string reason;
      bool ok = true;
      try {
        families::check_admissible(s);
      } catch (const DomainError& e) {
        ok = false;
        reason = e.what();
      }
      if (s.family == Family::H3 || s.family == Family::H4) {
        const std::uint64_t q = std::uint64_t{p} * p - 1;
        reason = "p^2-1 = " + std::to_string(q) + (q % 5 == 0 ? " = 0 mod 5" : ", not 0 mod 5");
        if (p == 5) reason = "p = 5";
        reason += "; alpha^2 - 3 alpha + 1 " + std::string(families::h_alpha_exists(p) ? "has" : "has no") +
                  " root mod p";
      } else if (ok) {
        reason = "-";
      }
      t.rows.push_back({families::to_string(s), ok ? "yes" : "no", reason});
    }
  }
  return t;
}

Table make_table(TableKind kind, const std::vector<std::uint32_t>& primes, unsigned max_dim, Tier tier,
                 std::uint64_t seed) {
  switch (kind) {
    case TableKind::coxeter: return coxeter_table(primes, max_dim, tier, seed);
    case TableKind::h2: return h2_table(primes, tier);
    case TableKind::families: return families_table(primes, max_dim);
    case TableKind::classification: break;
  }
  Table out;
  for (const std::uint32_t p : primes) {
    Table t = classification_table(p, max_dim, tier, seed);
    if (out.columns.empty()) {
      out = std::move(t);
      continue;
    }
    out.title += "; p = " + std::to_string(p);
    out.rows.insert(out.rows.end(), t.rows.begin(), t.rows.end());
  }
  return out;
}

namespace {

std::string cell(const std::string& c) {
  std::string out;
  for (char ch : c) {
    if (ch == '|') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string to_markdown(const Table& t) {
  std::string s = "## " + t.title + "\n\n|";
  for (const auto& c : t.columns) s += " " + cell(c) + " |";
  s += "\n|";
  for (std::size_t i = 0; i < t.columns.size(); ++i) s += " --- |";
  s += "\n";
  for (const auto& r : t.rows) {
    s += "|";
    for (const auto& c : r) s += " " + cell(c) + " |";
    s += "\n";
  }
  if (!t.notes.empty()) {
    s += "\n";
    for (const auto& n : t.notes) s += "- " + n + "\n";
  }
  return s;
}

nlohmann::json to_json(const Table& t) {
  return {{"title", t.title}, {"columns", t.columns}, {"rows", t.rows}, {"notes", t.notes}};
}

}  // namespace reflcat::cli
