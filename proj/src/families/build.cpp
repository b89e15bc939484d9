#include "reflcat/families/build.hpp"

#include <algorithm>

#include "reflcat/error.hpp"
#include "reflcat/group/meataxe.hpp"
#include "reflcat/group/reflections.hpp"

namespace reflcat::families {

using ff::PrimeField;
using ff::Residue;
using ff::Vec;
using group::MatGroup;

namespace {

Vec basis_vector(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

SquareClass class_of(const PrimeField& f, std::int64_t num, std::int64_t den = 1) {
  return f.square_class(f.div(f.reduce(num), f.reduce(den)));
}

std::uint64_t factorial(unsigned n) {
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

// Determinant of the simple-root Gram matrix as num/den.
std::pair<std::int64_t, std::int64_t> coxeter_det(CoxeterType t, unsigned n) {
  switch (t) {
    case CoxeterType::A:
      return {n + 1, 1};
    case CoxeterType::D:
      return {4, 1};
    case CoxeterType::E6:
      return {3, 1};
    case CoxeterType::E7:
      return {2, 1};
    case CoxeterType::F4:
      return {1, 4};
    default:
      return {1, 1};
  }
}

MatGroup group_from(const QuadraticSpace& s, std::vector<Matrix> gens) {
  return MatGroup(s.field(), s.dim(), std::move(gens));
}

}  // namespace

ConstructedGroup build_coxeter(Family family, unsigned n, std::uint32_t p) {
  const auto type = coxeter_type(family);
  if (!type) throw DomainError("not a Coxeter family: " + std::string(to_string(family)));
  FamilySpec spec = make_spec(family, n, p);
  check_admissible(spec);
  const PrimeField f(p);
  const RootData roots = simple_roots(*type, n);
  const auto g4 = gram_times4(roots);
  const Residue quarter = f.inv(4);
  Matrix gram(f, n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) gram.set(i, j, f.mul(f.reduce(g4[i][j]), quarter));
  QuadraticSpace space(gram);
  std::vector<Matrix> gens;
  for (unsigned i = 0; i < n; ++i) gens.push_back(space.reflection(basis_vector(n, i)));
  const auto [num, den] = coxeter_det(*type, n);
  return {spec, space, group_from(space, gens), weyl_order(*type, n), class_of(f, num, den), {}};
}

ConstructedGroup build_abar(unsigned n, std::uint32_t p) {
  FamilySpec spec = make_spec(Family::Abar, n, p);
  check_admissible(spec);
  const PrimeField f(p);
  Matrix gram(f, n, n);
  for (unsigned i = 0; i < n; ++i) {
    gram.set(i, i, 2);
    if (i + 1 < n) {
      gram.set(i, i + 1, f.neg(1));
      gram.set(i + 1, i, f.neg(1));
    }
  }
  QuadraticSpace space(gram);
  std::vector<Matrix> gens;
  for (unsigned i = 0; i < n; ++i) gens.push_back(space.reflection(basis_vector(n, i)));
  // The last transposition moves along the image of e_{n+1} - e_{n+2}, which
  // is sum_i i v_i in the quotient.
  Vec last(n);
  for (unsigned i = 0; i < n; ++i) last[i] = f.reduce(i + 1);
  gens.push_back(space.reflection(last));
  return {spec, space, group_from(space, gens), factorial(n + 2), class_of(f, -1), {}};
}

Residue default_zeta(std::uint32_t p) {
  const PrimeField f(p);
  const auto r = f.sqrt(f.reduce(5));
  if (!r) throw DomainError("5 is not a square mod " + std::to_string(p));
  return std::min(*r, f.neg(*r));
}

Residue h_alpha(std::uint32_t p, Residue zeta) {
  const PrimeField f(p);
  return f.mul(f.add(3, f.reduce(zeta)), f.half());
}

ConstructedGroup build_h(Family family, std::uint32_t p, std::optional<Residue> zeta) {
  if (family != Family::H3 && family != Family::H4) throw DomainError("not an H family");
  const unsigned n = family == Family::H3 ? 3 : 4;
  FamilySpec spec = make_spec(family, n, p);
  check_admissible(spec);
  const PrimeField f(p);
  if (zeta && (*zeta >= p || f.mul(*zeta, *zeta) != f.reduce(5)))
    throw DomainError("zeta = " + std::to_string(*zeta) + " is not a square root of 5 mod " + std::to_string(p));
  spec.zeta = zeta ? *zeta : default_zeta(p);
  const Residue a = h_alpha(p, *spec.zeta), am1 = f.sub(a, 1), one = 1, m1 = f.neg(1);
  std::vector<Vec> axes{{a, am1, m1}, {f.neg(a), am1, one}, {one, f.neg(a), am1}};
  if (n == 4) {
    for (auto& v : axes) v.push_back(0);
    axes.push_back({one, 0, f.neg(a), am1});
  }
  const QuadraticSpace space(Matrix::identity(f, n));
  std::vector<Matrix> gens;
  for (const auto& v : axes) gens.push_back(space.reflection(v));
  ConstructedGroup c{spec, space, group_from(space, gens), n == 3 ? 120u : 14400u, std::nullopt, {}};
  c.conventions.push_back({"ambient", space.discriminant()});
  // Simple roots rescaled to norm 2 (the roots all have the same norm).
  Matrix g(f, n, n);
  const Residue scale = f.div(2, space.q(axes[0]));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) g.set(i, j, f.mul(scale, space.b(axes[i], axes[j])));
  const Residue det = g.det();
  c.conventions.push_back({"simple_root", det == 0 ? std::nullopt : std::optional(f.square_class(det))});
  return c;
}

ConstructedGroup build_i2(std::uint32_t p, unsigned d, Sign sign) {
  FamilySpec spec = make_spec(Family::I2, 2, p);
  spec.d = d;
  spec.sign = sign;
  check_admissible(spec);
  const PrimeField f(p);
  if (sign == Sign::plus) {
    const auto space = QuadraticSpace::hyperbolic_plane(f);
    const Residue t = f.pow(f.primitive_root(), (p - 1) / d);
    std::vector<Matrix> gens{space.reflection({1, 1}), space.reflection({1, t})};
    return {spec, space, group_from(space, gens), 2ull * d, class_of(f, -1), {}};
  }
  const ff::Fp2Field k(f);
  const auto space = QuadraticSpace::anisotropic_plane(f);
  const ff::Fp2 c = k.pow(k.norm_one_generator(), (p + 1) / d);
  const Matrix rho = Matrix::from_rows(f, {{c.a, f.mul(k.gamma(), c.b)}, {c.b, c.a}});
  const Matrix tau = space.reflection({0, 1});
  const Matrix second = tau * rho;
  if (!group::is_reflection(space, second)) throw InvariantViolation("tau rho is not a reflection");
  std::vector<Matrix> gens{tau, second};
  return {spec, space, group_from(space, gens), 2ull * d, class_of(f, -static_cast<std::int64_t>(k.gamma())), {}};
}

Sign space_sign(const QuadraticSpace& s) {
  if (s.dim() % 2) throw DomainError("Witt sign needs even dimension");
  return quad::witt_sign_from_discriminant(s) == quad::WittSign::plus ? Sign::plus : Sign::minus;
}

std::optional<std::uint64_t> orthogonal_order(unsigned dim, std::uint32_t p, Sign sign) {
  if (dim == 0) throw DomainError("zero dimension");
  using U = unsigned __int128;
  const U q = p;
  const U cap = ~std::uint64_t{0};
  U r = 2;
  auto mul = [&](U x) {
    r *= x;
    return r <= cap;
  };
  auto qpow = [&](unsigned e) {
    U x = 1;
    for (unsigned i = 0; i < e; ++i) {
      x *= q;
      if (x > cap) return cap + 1;
    }
    return x;
  };
  const unsigned m = dim / 2;
  bool ok = true;
  if (dim % 2) {
    ok = mul(qpow(m * m));
    for (unsigned i = 1; ok && i <= m; ++i) ok = mul(qpow(2 * i) - 1);
  } else {
    ok = mul(qpow(m * (m - 1)));
    if (ok) ok = mul(sign == Sign::plus ? qpow(m) - 1 : qpow(m) + 1);
    for (unsigned i = 1; ok && i < m; ++i) ok = mul(qpow(2 * i) - 1);
  }
  if (!ok) return std::nullopt;
  return static_cast<std::uint64_t>(r);
}

QuadraticSpace orthogonal_space(const FamilySpec& spec) {
  const PrimeField f(spec.p);
  const unsigned n = spec.n;
  if (n % 2) {
    const bool minus = spec.disc.value_or(SquareClass::square) == SquareClass::nonsquare;
    return QuadraticSpace::standard(f, n, minus ? quad::Variant::minus_type : quad::Variant::plus_type);
  }
  const bool want_plus = spec.sign.value_or(Sign::plus) == Sign::plus;
  const bool identity_plus = f.is_square(f.reduce((n / 2) % 2 ? -1 : 1));
  return QuadraticSpace::standard(f, n, want_plus == identity_plus ? quad::Variant::plus_type : quad::Variant::minus_type);
}

namespace {

MatGroup generated_incrementally(const QuadraticSpace& s, const std::vector<Matrix>& refl) {
  MatGroup g(s.field(), s.dim(), {});
  for (const auto& r : refl)
    if (!g.contains(r)) g = g.with_generator(r);
  return g;
}

}  // namespace

ConstructedGroup build_orthogonal(const QuadraticSpace& space, OrthogonalVariant variant) {
  const PrimeField& f = space.field();
  const unsigned n = static_cast<unsigned>(space.dim());
  const Family fam = variant == OrthogonalVariant::full     ? Family::O_full
                     : variant == OrthogonalVariant::class1 ? Family::O1
                                                            : Family::O2;
  FamilySpec spec = make_spec(fam, n, space.p());
  if (n % 2)
    spec.disc = space.discriminant();
  else
    spec.sign = space_sign(space);
  check_admissible(spec);
  const Sign sign = spec.sign.value_or(Sign::plus);
  auto order = orthogonal_order(n, space.p(), sign);
  // Discriminant predicted by the parameters: disc for odd dim, and for even
  // dim plus iff (-1)^(n/2) det is a square.
  SquareClass disc;
  if (n % 2) {
    disc = *spec.disc;
  } else {
    const bool minus_one_pow_sq = f.is_square(f.reduce((n / 2) % 2 ? -1 : 1));
    disc = (sign == Sign::plus) == minus_one_pow_sq ? SquareClass::square : SquareClass::nonsquare;
  }
  if (variant == OrthogonalVariant::full) {
    auto g = generated_incrementally(space, group::reflections_in(space, group::AxisFilter::all));
    return {spec, space, std::move(g), order, disc, {}};
  }
  if (order) *order /= 2;
  using group::AxisFilter;
  AxisFilter filter = variant == OrthogonalVariant::class1 ? AxisFilter::square_axis : AxisFilter::nonsquare_axis;
  auto g = generated_incrementally(space, group::reflections_in(space, filter));
  if (n % 2 && group::center_contains_minus_id(g) != (variant == OrthogonalVariant::class1)) {
    filter = filter == AxisFilter::square_axis ? AxisFilter::nonsquare_axis : AxisFilter::square_axis;
    g = generated_incrementally(space, group::reflections_in(space, filter));
  }
  return {spec, space, std::move(g), order, disc, {}};
}

ConstructedGroup build(const FamilySpec& spec) {
  check_admissible(spec);
  switch (spec.family) {
    case Family::H3:
    case Family::H4:
      return build_h(spec.family, spec.p, spec.zeta);
    case Family::Abar:
      return build_abar(spec.n, spec.p);
    case Family::I2:
      return build_i2(spec.p, *spec.d, spec.sign.value_or(Sign::plus));
    case Family::O_full:
      return build_orthogonal(orthogonal_space(spec), OrthogonalVariant::full);
    case Family::O1:
      return build_orthogonal(orthogonal_space(spec), OrthogonalVariant::class1);
    case Family::O2:
      return build_orthogonal(orthogonal_space(spec), OrthogonalVariant::class2);
    default:
      return build_coxeter(spec.family, spec.n, spec.p);
  }
}

ConstructedGroup twisted_form(const ConstructedGroup& c) {
  const auto& f = c.space.field();
  if (!group::meataxe(c.group.generators(), c.space.dim(), f).irreducible)
    throw DomainError("twisted forms need an irreducible group (" + label(c.spec) + ")");
  ConstructedGroup t{c.spec, c.space.twist(f.nonsquare()), c.group, c.expected_order, c.expected_discriminant, {}};
  if (t.expected_discriminant && c.space.dim() % 2)
    t.expected_discriminant = *t.expected_discriminant == SquareClass::square ? SquareClass::nonsquare : SquareClass::square;
  if (is_orthogonal(t.spec.family) && t.spec.disc) t.spec.disc = t.space.discriminant();
  return t;
}

}  // namespace reflcat::families
