#include "reflcat/fusion/report.hpp"

#include <algorithm>

#include "reflcat/cohomology/gmodule.hpp"
#include "reflcat/cohomology/stable.hpp"
#include "reflcat/error.hpp"
#include "reflcat/families/build.hpp"
#include "reflcat/families/verify.hpp"

namespace reflcat::fusion {

using families::Family;
using families::FamilySpec;
using families::Sign;

std::string_view to_string(Tier t) {
  switch (t) {
    case Tier::fast: return "fast";
    case Tier::full: return "full";
    case Tier::stretch: return "stretch";
  }
  return "?";
}

std::optional<Tier> tier_from_string(std::string_view s) {
  if (s == "fast") return Tier::fast;
  if (s == "full") return Tier::full;
  if (s == "stretch") return Tier::stretch;
  return std::nullopt;
}

bool tier_builds(Tier t, unsigned dim, std::uint32_t p) {
  switch (t) {
    case Tier::fast: return dim <= 3 && p <= 7;
    case Tier::full: return dim <= 4 && p <= 13;
    case Tier::stretch: return dim <= 8 && p <= 13;
  }
  return false;
}

namespace {

std::optional<std::uint64_t> factorial(unsigned n) {
  if (n > 20) return std::nullopt;
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

std::string fp_power(std::uint32_t p, std::size_t k) {
  if (k == 0) return "0";
  std::string s = "F_" + std::to_string(p);
  return k == 1 ? s : s + "^" + std::to_string(k);
}

}  // namespace

std::optional<std::uint64_t> formula_order(const FamilySpec& s) {
  if (auto ct = families::coxeter_type(s.family)) {
    if (s.family == Family::A) return factorial(s.n + 1);
    if (s.family == Family::B) {
      auto f = factorial(s.n);
      if (!f || s.n >= 44) return std::nullopt;
      return (std::uint64_t{1} << s.n) * *f;
    }
    if (s.family == Family::D) {
      auto f = factorial(s.n);
      if (!f) return std::nullopt;
      return (std::uint64_t{1} << (s.n - 1)) * *f;
    }
    return families::weyl_order(*ct, s.n);
  }
  switch (s.family) {
    case Family::H3: return 120;
    case Family::H4: return 14400;
    case Family::Abar: return factorial(s.n + 2);
    case Family::I2: return 2 * std::uint64_t{s.d.value_or(0)};
    case Family::O_full:
    case Family::O1:
    case Family::O2: {
      auto o = families::orthogonal_order(s.n, s.p, s.sign.value_or(Sign::plus));
      if (!o) return std::nullopt;
      return s.family == Family::O_full ? *o : *o / 2;
    }
    default: return std::nullopt;
  }
}

std::string h2_tabulated(const FamilySpec& s) {
  if (s.family != Family::O2) return "0";
  if (s.n == 3 && s.p > 3) return fp_power(s.p, 1);
  if (s.p == 3 && (s.n == 5 || s.n == 7)) return fp_power(3, 1);
  if (s.p == 3 && s.n == 8 && s.sign == Sign::minus) return fp_power(3, 2);
  return "0";
}

bool h2_unresolved(const FamilySpec& s) {
  return s.family == Family::O2 && s.p == 3 && (s.n == 5 || s.n == 7 || (s.n == 8 && s.sign == Sign::minus));
}

H2Computation compute_h2(const FamilySpec& s, std::uint64_t order_limit) {
  const auto c = families::build(s);
  const std::uint64_t order = c.group.order();
  if (order % s.p != 0) return {"0", "coprime"};
  const ff::Matrix minus = ff::Matrix::scalar(c.space.field(), c.space.dim(), c.space.field().neg(1));
  if (order > order_limit) {
    if (c.group.contains(minus)) return {"0", "lhs"};
    return {"-", "group too large"};
  }
  const auto m = cohomology::GModule::natural(c.group);
  if (m.contains(minus) && cohomology::lhs_vanishing(m, {0, m.index(minus)}, 2)) return {"0", "lhs"};
  try {
    return {fp_power(s.p, cohomology::h2_stable_elements(m).dim), "stable"};
  } catch (const DomainError&) {
    return {"-", "non-cyclic Sylow subgroup"};
  }
}

std::vector<FamilySpec> classification_specs(std::uint32_t p, unsigned max_dim) {
  std::vector<FamilySpec> out;
  auto add = [&](FamilySpec s) {
    try {
      families::check_admissible(s);
    } catch (const DomainError&) {
      return;
    }
    out.push_back(std::move(s));
  };
  using families::make_spec;
  for (unsigned n = 1; n <= max_dim; ++n) add(make_spec(Family::A, n, p));
  for (unsigned n = 3; n <= max_dim; ++n) add(make_spec(Family::B, n, p));
  for (unsigned n = 4; n <= max_dim; ++n) add(make_spec(Family::D, n, p));
  if (max_dim >= 6 && p >= 5) add(make_spec(Family::E6, 6, p));
  if (max_dim >= 7) add(make_spec(Family::E7, 7, p));
  if (max_dim >= 8) add(make_spec(Family::E8, 8, p));
  if (max_dim >= 4) add(make_spec(Family::F4, 4, p));
  if (max_dim >= 2)
    for (Sign sign : {Sign::plus, Sign::minus}) {
      const std::uint32_t m = sign == Sign::plus ? p - 1 : p + 1;
      for (unsigned d = 3; d <= m; ++d)
        if (m % d == 0) {
          auto s = make_spec(Family::I2, 2, p);
          s.d = d;
          s.sign = sign;
          add(s);
        }
    }
  if (p > 5) {
    if (max_dim >= 3) add(make_spec(Family::H3, 3, p));
    if (max_dim >= 4) add(make_spec(Family::H4, 4, p));
  }
  for (unsigned n = 3; n <= max_dim; ++n) add(make_spec(Family::Abar, n, p));
  for (Family f : {Family::O_full, Family::O1, Family::O2})
    for (unsigned dim = 3; dim <= max_dim; ++dim) {
      if (dim % 2) {
        add(make_spec(f, dim, p));
        continue;
      }
      for (Sign sign : {Sign::plus, Sign::minus}) {
        auto s = make_spec(f, dim, p);
        s.sign = sign;
        add(s);
      }
    }
  return out;
}

std::vector<ClassificationRow> classification_report(std::uint32_t p, unsigned max_dim, Tier tier, std::uint64_t seed) {
  if (!ff::is_prime(p) || p == 2) throw DomainError("p must be an odd prime");
  std::vector<ClassificationRow> rows;
  for (const auto& s : classification_specs(p, max_dim)) {
    ClassificationRow r;
    r.spec = s;
    r.group = families::label(s);
    r.dim = s.n;
    r.h2 = h2_tabulated(s);
    if (h2_unresolved(s))
      r.extensions = "unresolved";
    else if (r.h2 == "0")
      r.extensions = "unique up to twisting";
    else
      r.extensions = "torsor over F_" + std::to_string(p);
    if (tier_builds(tier, s.n, p)) {
      const auto c = families::build(s);
      const auto v = families::verify_family(c, seed);
      r.order = v.order;
      const auto* oracle = v.find("order_oracle");
      r.order_source = oracle && oracle->status == families::CheckStatus::pass ? "closure" : "chain";
      r.irreducible = v.irreducible ? "yes" : "no";
      r.h2_computed = compute_h2(s);
      r.status = v.passed() ? "verified" : "failed";
    } else {
      r.order = formula_order(s);
      r.order_source = "formula";
      r.irreducible = "-";
      r.h2_computed = {"-", "tier " + std::string(to_string(tier))};
      r.status = "formula-only";
    }
    if (h2_unresolved(s)) r.status = "unresolved";
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace reflcat::fusion
