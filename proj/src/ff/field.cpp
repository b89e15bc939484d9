#include "reflcat/ff/field.hpp"

#include <string>

#include "reflcat/error.hpp"

namespace reflcat::ff {

std::string_view to_string(SquareClass c) {
  return c == SquareClass::square ? "square" : "nonsquare";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || p >= kMaxPrime || !is_prime(p))
    throw DomainError("modulus must be an odd prime below 65536, got " + std::to_string(p));
  half_ = (p + 1) / 2;
  nonsquare_ = 2;
  while (pow(nonsquare_, (p - 1) / 2) == 1) ++nonsquare_;
  const auto factors = prime_factors(p - 1);
  for (primitive_root_ = 2;; ++primitive_root_) {
    bool ok = true;
    for (auto q : factors) ok = ok && pow(primitive_root_, (p - 1) / q) != 1;
    if (ok) break;
  }
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const {
  std::uint64_t base = a % p_, acc = 1;
  while (e) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Residue>(acc);
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw DomainError("zero has no inverse in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

bool PrimeField::is_square(Residue x) const {
  if (x % p_ == 0) throw DomainError("square class of 0 is undefined");
  return pow(x, (p_ - 1) / 2) == 1;
}

SquareClass PrimeField::square_class(Residue x) const {
  return is_square(x) ? SquareClass::square : SquareClass::nonsquare;
}

std::uint32_t PrimeField::order(Residue a) const {
  if (a % p_ == 0) throw DomainError("zero has no multiplicative order");
  std::uint32_t k = 1;
  for (Residue x = a % p_; x != 1; x = mul(x, a)) ++k;
  return k;
}

std::optional<Residue> PrimeField::sqrt(Residue x) const {
  x %= p_;
  if (x == 0) return Residue{0};
  if (!is_square(x)) return std::nullopt;
  Residue r = 0;
  if (p_ < kTonelliThreshold) {
    for (Residue c = 1; c <= p_ / 2; ++c)
      if (mul(c, c) == x) {
        r = c;
        break;
      }
  } else {
    // Tonelli-Shanks
    std::uint32_t q = p_ - 1, s = 0;
    while (q % 2 == 0) q /= 2, ++s;
    Residue m = s, c = pow(nonsquare_, q), t = pow(x, q);
    r = pow(x, (q + 1) / 2);
    while (t != 1) {
      std::uint32_t i = 0;
      for (Residue tt = t; tt != 1; tt = mul(tt, tt)) ++i;
      Residue b = c;
      for (std::uint32_t j = 0; j + 1 < m - i; ++j) b = mul(b, b);
      m = i;
      c = mul(b, b);
      t = mul(t, c);
      r = mul(r, b);
    }
  }
  return r <= p_ - r ? r : p_ - r;
}

Fp2 Fp2Field::mul(Fp2 x, Fp2 y) const {
  const auto& f = base_;
  return {f.add(f.mul(x.a, y.a), f.mul(gamma_, f.mul(x.b, y.b))),
          f.add(f.mul(x.a, y.b), f.mul(x.b, y.a))};
}

Fp2 Fp2Field::pow(Fp2 x, std::uint64_t e) const {
  Fp2 acc = one();
  while (e) {
    if (e & 1) acc = mul(acc, x);
    x = mul(x, x);
    e >>= 1;
  }
  return acc;
}

Residue Fp2Field::norm(Fp2 x) const {
  const auto& f = base_;
  return f.sub(f.mul(x.a, x.a), f.mul(gamma_, f.mul(x.b, x.b)));
}

std::uint64_t Fp2Field::order(Fp2 x) const {
  if (x.a == 0 && x.b == 0) throw DomainError("zero has no multiplicative order");
  std::uint64_t k = 1;
  for (Fp2 y = x; !(y == one()); y = mul(y, x)) ++k;
  return k;
}

Fp2 Fp2Field::norm_one_generator() const {
  const std::uint32_t p = base_.p();
  const auto factors = prime_factors(p + 1);
  for (Residue a = 0; a < p; ++a)
    for (Residue b = 1; b < p; ++b) {
      const Fp2 c{a, b};
      if (norm(c) != 1) continue;
      bool ok = true;
      for (auto q : factors) ok = ok && !(pow(c, (p + 1) / q) == one());
      if (ok) return c;
    }
  throw InvariantViolation("norm-one subgroup has no generator");
}

}  // namespace reflcat::ff
