#include "reflcat/families/spec.hpp"

#include <array>
#include <charconv>

#include "reflcat/error.hpp"

namespace reflcat::families {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 14> kNames{{{Family::A, "A"},
                                                                      {Family::B, "B"},
                                                                      {Family::D, "D"},
                                                                      {Family::E6, "E6"},
                                                                      {Family::E7, "E7"},
                                                                      {Family::E8, "E8"},
                                                                      {Family::F4, "F4"},
                                                                      {Family::H3, "H3"},
                                                                      {Family::H4, "H4"},
                                                                      {Family::Abar, "Abar"},
                                                                      {Family::I2, "I2"},
                                                                      {Family::O_full, "O"},
                                                                      {Family::O1, "O1"},
                                                                      {Family::O2, "O2"}}};

std::uint64_t parse_uint(std::string_view key, std::string_view v) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || v.empty())
    throw DomainError("family spec: bad value for " + std::string(key) + ": '" + std::string(v) + "'");
  return out;
}

char sign_char(bool plus) { return plus ? '+' : '-'; }

bool parse_pm(std::string_view key, std::string_view v) {
  if (v == "+" || v == "plus") return true;
  if (v == "-" || v == "minus") return false;
  throw DomainError("family spec: " + std::string(key) + " must be + or -");
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

std::string_view to_string(Family f) {
  for (const auto& [fam, name] : kNames)
    if (fam == f) return name;
  return "?";
}

std::optional<Family> family_from_string(std::string_view s) {
  for (const auto& [fam, name] : kNames)
    if (name == s) return fam;
  if (s == "O_full") return Family::O_full;
  return std::nullopt;
}

std::optional<CoxeterType> coxeter_type(Family f) {
  switch (f) {
    case Family::A:
      return CoxeterType::A;
    case Family::B:
      return CoxeterType::B;
    case Family::D:
      return CoxeterType::D;
    case Family::E6:
      return CoxeterType::E6;
    case Family::E7:
      return CoxeterType::E7;
    case Family::E8:
      return CoxeterType::E8;
    case Family::F4:
      return CoxeterType::F4;
    default:
      return std::nullopt;
  }
}

bool is_orthogonal(Family f) { return f == Family::O_full || f == Family::O1 || f == Family::O2; }

FamilySpec make_spec(Family family, unsigned n, std::uint32_t p) {
  FamilySpec s;
  s.family = family;
  s.n = n;
  s.p = p;
  return s;
}

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw DomainError("family spec needs FAMILY:key=value,...");
  const auto fam = family_from_string(text.substr(0, colon));
  if (!fam) throw DomainError("unknown family '" + std::string(text.substr(0, colon)) + "'");
  FamilySpec s;
  s.family = *fam;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw DomainError("family spec: expected key=value, got '" + std::string(item) + "'");
    const std::string_view key = item.substr(0, eq), val = item.substr(eq + 1);
    if (key == "n" || key == "dim") {
      s.n = static_cast<unsigned>(parse_uint(key, val));
    } else if (key == "p") {
      const auto p = parse_uint(key, val);
      if (p > 0xffffffffu) throw DomainError("family spec: p too large");
      s.p = static_cast<std::uint32_t>(p);
    } else if (key == "zeta") {
      s.zeta = static_cast<ff::Residue>(parse_uint(key, val));
    } else if (key == "d") {
      s.d = static_cast<unsigned>(parse_uint(key, val));
    } else if (key == "sign") {
      s.sign = parse_pm(key, val) ? Sign::plus : Sign::minus;
    } else if (key == "disc") {
      s.disc = parse_pm(key, val) ? ff::SquareClass::square : ff::SquareClass::nonsquare;
    } else {
      throw DomainError("family spec: unknown key '" + std::string(key) + "'");
    }
  }
  if (s.family == Family::I2 && s.n == 0) s.n = 2;
  if (s.family == Family::H3 && s.n == 0) s.n = 3;
  if (s.family == Family::H4 && s.n == 0) s.n = 4;
  for (auto [f, r] : {std::pair{Family::E6, 6u}, {Family::E7, 7u}, {Family::E8, 8u}, {Family::F4, 4u}})
    if (s.family == f && s.n == 0) s.n = r;
  if (s.p == 0) throw DomainError("family spec: p is required");
  if (s.n == 0) throw DomainError("family spec: n (or dim) is required");
  return s;
}

std::string to_string(const FamilySpec& s) {
  std::string out(to_string(s.family));
  out += is_orthogonal(s.family) ? ":dim=" : ":n=";
  out += std::to_string(s.n) + ",p=" + std::to_string(s.p);
  if (s.zeta) out += ",zeta=" + std::to_string(*s.zeta);
  if (s.d) out += ",d=" + std::to_string(*s.d);
  if (s.sign) out += std::string(",sign=") + sign_char(*s.sign == Sign::plus);
  if (s.disc) out += std::string(",disc=") + sign_char(*s.disc == ff::SquareClass::square);
  return out;
}

std::string label(const FamilySpec& s) {
  const std::string np = "(" + std::to_string(s.n) + "," + std::to_string(s.p);
  switch (s.family) {
    case Family::I2:
      return "I2(" + std::to_string(s.p) + ";d=" + std::to_string(s.d.value_or(0)) + "," +
             sign_char(s.sign.value_or(Sign::plus) == Sign::plus) + ")";
    case Family::H3:
    case Family::H4:
      return std::string(to_string(s.family)) + "(" + std::to_string(s.p) +
             (s.zeta ? ";zeta=" + std::to_string(*s.zeta) : "") + ")";
    case Family::O_full:
    case Family::O1:
    case Family::O2: {
      std::string base(to_string(s.family));
      if (s.n % 2 == 0 && s.sign) base += sign_char(*s.sign == Sign::plus);
      std::string tail = np;
      if (s.n % 2 == 1 && s.disc == ff::SquareClass::nonsquare) tail += ";disc=-";
      return base + tail + ")";
    }
    case Family::E6:
    case Family::E7:
    case Family::E8:
    case Family::F4:
      return std::string(to_string(s.family)) + "(" + std::to_string(s.p) + ")";
    default:
      return std::string(to_string(s.family)) + np + ")";
  }
}

bool h_realizable(std::uint32_t p) {
  const std::uint64_t q = p;
  return p == 5 || (p > 5 && (q * q - 1) % 5 == 0);
}

bool h_alpha_exists(std::uint32_t p) {
  const ff::PrimeField f(p);
  for (ff::Residue a = 0; a < p; ++a)
    if (f.add(f.sub(f.mul(a, a), f.mul(3, a)), 1) == 0) return true;
  return false;
}

void check_admissible(const FamilySpec& s) {
  if (s.p < 3 || !is_prime(s.p)) throw DomainError("p must be an odd prime, got " + std::to_string(s.p));
  const std::uint64_t p = s.p, n = s.n;
  const std::string at = " (" + label(s) + ")";
  switch (s.family) {
    case Family::A:
      if ((n + 1) % p == 0)
        throw DomainError("A_n needs p not dividing n+1" + at + "; the quotient module is Abar:n=" +
                          std::to_string(n - 1) + ",p=" + std::to_string(p));
      break;
    case Family::B:
      if (n < 2) throw DomainError("B_n needs n >= 2" + at);
      break;
    case Family::D:
      if (n < 4) throw DomainError("D_n needs n >= 4" + at);
      break;
    case Family::E6:
      if (p == 3) throw DomainError("E6 needs p != 3" + at + "; the quotient module is O2:dim=5,p=3");
      break;
    case Family::H3:
    case Family::H4:
      if (!h_realizable(s.p)) throw DomainError("H3/H4 need p = 5 or p^2 = 1 mod 5" + at);
      break;
    case Family::Abar:
      if (n < 3) throw DomainError("Abar_n needs n >= 3" + at);
      if ((n + 2) % p != 0) throw DomainError("Abar_n needs p dividing n+2" + at);
      break;
    case Family::I2: {
      if (!s.d || *s.d < 2) throw DomainError("I2 needs d >= 2" + at);
      const bool plus = s.sign.value_or(Sign::plus) == Sign::plus;
      if (plus && (p - 1) % *s.d != 0) throw DomainError("I2 with sign + needs d | p-1" + at);
      if (!plus && (p + 1) % *s.d != 0) throw DomainError("I2 with sign - needs d | p+1" + at);
      break;
    }
    case Family::O_full:
    case Family::O1:
    case Family::O2:
      if (n < 1 || (s.family != Family::O_full && n < 2)) throw DomainError("orthogonal dimension too small" + at);
      break;
    default:
      break;
  }
}

}  // namespace reflcat::families
