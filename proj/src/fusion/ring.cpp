#include "reflcat/fusion/ring.hpp"

#include <algorithm>
#include <string>

#include "reflcat/error.hpp"

namespace reflcat::fusion {

namespace {

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

FusionRing::FusionRing(CrossedSkeleton sk, std::uint64_t label_limit) : sk_(std::move(sk)) {
  const std::uint64_t n = sk_.label_count();
  if (n > label_limit)
    throw ResourceError("fusion ring would have " + std::to_string(n) + " labels, limit " + std::to_string(label_limit));
  const std::size_t m = sk_.metric().rank();
  const std::uint32_t p = sk_.metric().p();
  labels_.reserve(n);
  for (std::size_t g = 0; g < sk_.order(); ++g) {
    begin_.push_back(labels_.size());
    const auto& piv = sk_.component(g).image.pivots();
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < m; ++c)
      if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.push_back(c);
    const std::uint64_t count = sk_.simple_count(g);
    for (std::uint64_t k = 0; k < count; ++k) {
      Vec v(m, 0);
      std::uint64_t code = k;
      for (std::size_t j = free.size(); j-- > 0;) {
        v[free[j]] = static_cast<Residue>(code % p);
        code /= p;
      }
      labels_.push_back({g, std::move(v)});
    }
    free_.push_back(std::move(free));
  }
  begin_.push_back(labels_.size());
}

std::string FusionRing::label_name(std::size_t i) const {
  const auto& l = labels_[i];
  std::string s = "g" + std::to_string(l.g) + ":(";
  for (std::size_t j = 0; j < l.coset.size(); ++j) s += (j ? "," : "") + std::to_string(l.coset[j]);
  return s + ")";
}

std::size_t FusionRing::find(std::size_t g, const Vec& v) const {
  const Vec r = sk_.component(g).image.reduce(v);
  const std::uint32_t p = sk_.metric().p();
  std::size_t local = 0;
  for (auto c : free_[g]) local = local * p + r[c];
  return begin_[g] + local;
}

const FusionRing::PairData& FusionRing::pair_data(std::size_t g, std::size_t h) const {
  const std::uint64_t key = static_cast<std::uint64_t>(g) * sk_.order() + h;
  if (auto it = pairs_.find(key); it != pairs_.end()) return it->second;
  const auto& grp = sk_.group();
  const std::size_t k = grp.mul(g, h);
  const auto& cg = sk_.component(g);
  const auto& ch = sk_.component(h);
  const auto& ck = sk_.component(k);
  const Subspace w = cg.image + ch.image.mapped(grp.action(g));
  if (!((w + ck.image) == w))
    throw InvariantViolation("I_gh is not contained in I_g + T_g I_h for elements " + std::to_string(g) + ", " +
                             std::to_string(h));
  const std::size_t twice = cg.d + ch.d + ck.d;
  if (twice % 2 || twice < 2 * w.dim())
    throw InvariantViolation("non-integral multiplicity exponent for elements " + std::to_string(g) + ", " +
                             std::to_string(h));
  PairData pd;
  pd.complement = ff::complement_basis(w, ck.image);
  pd.mult = ipow(sk_.metric().p(), twice / 2 - w.dim());
  return pairs_.emplace(key, std::move(pd)).first->second;
}

std::vector<Term> FusionRing::product(std::size_t x, std::size_t y) const {
  const auto& lx = labels_[x];
  const auto& ly = labels_[y];
  const auto& grp = sk_.group();
  const auto& f = sk_.metric().field();
  const std::size_t k = grp.mul(lx.g, ly.g);
  const auto& pd = pair_data(lx.g, ly.g);
  const Vec base = ff::vec_add(f, lx.coset, grp.action(lx.g).apply(ly.coset));
  const std::uint32_t p = f.p();
  const std::uint64_t combos = ipow(p, pd.complement.size());
  std::vector<Term> out;
  out.reserve(combos);
  std::vector<Residue> coef(pd.complement.size(), 0);
  for (std::uint64_t c = 0; c < combos; ++c) {
    Vec v = base;
    for (std::size_t i = 0; i < coef.size(); ++i)
      if (coef[i]) v = ff::vec_add(f, v, ff::vec_scale(f, pd.complement[i], coef[i]));
    out.push_back({find(k, v), pd.mult});
    for (std::size_t i = 0; i < coef.size(); ++i) {
      if (++coef[i] < p) break;
      coef[i] = 0;
    }
  }
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.label < b.label; });
  return out;
}

std::uint64_t FusionRing::multiplicity(std::size_t x, std::size_t y, std::size_t w) const {
  for (const auto& t : product(x, y))
    if (t.label == w) return t.mult;
  return 0;
}

std::uint64_t FusionRing::fp_dim_squared(std::size_t x) const {
  return ipow(sk_.metric().p(), sk_.component(labels_[x].g).d);
}

std::size_t FusionRing::dual(std::size_t x) const {
  const auto& lx = labels_[x];
  const auto& grp = sk_.group();
  const std::size_t gi = grp.inv(lx.g);
  const auto& f = sk_.metric().field();
  return find(gi, ff::vec_scale(f, grp.action(gi).apply(lx.coset), f.neg(1)));
}

FusionRing fusion_ring(const CrossedSkeleton& sk, std::uint64_t label_limit) { return FusionRing(sk, label_limit); }

std::string_view to_string(AxiomStatus s) {
  switch (s) {
    case AxiomStatus::pass: return "pass";
    case AxiomStatus::fail: return "fail";
    case AxiomStatus::skipped: return "skipped";
  }
  return "?";
}

bool AxiomReport::passed() const {
  return std::none_of(results.begin(), results.end(), [](const auto& r) { return r.status == AxiomStatus::fail; });
}

namespace {

AxiomResult result(std::string name, const std::string& failure) {
  return {std::move(name), failure.empty() ? AxiomStatus::pass : AxiomStatus::fail, failure};
}

std::string check_associativity(const FusionRing& r) {
  const std::size_t n = r.size();
  std::vector<std::vector<Term>> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) table[x * n + y] = r.product(x, y);
  std::vector<std::int64_t> acc(n, 0);
  std::vector<std::size_t> touched;
  auto add = [&](std::size_t w, std::int64_t v) {
    if (acc[w] == 0) touched.push_back(w);
    acc[w] += v;
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        for (const auto& t : table[x * n + y])
          for (const auto& u : table[t.label * n + z]) add(u.label, static_cast<std::int64_t>(t.mult * u.mult));
        for (const auto& t : table[y * n + z])
          for (const auto& u : table[x * n + t.label]) add(u.label, -static_cast<std::int64_t>(t.mult * u.mult));
        bool ok = true;
        for (auto w : touched) {
          if (acc[w] != 0) ok = false;
          acc[w] = 0;
        }
        touched.clear();
        if (!ok)
          return "(" + r.label_name(x) + " " + r.label_name(y) + ") " + r.label_name(z) + " differs from " +
                 r.label_name(x) + " (" + r.label_name(y) + " " + r.label_name(z) + ")";
      }
  return {};
}

}  // namespace

AxiomReport check_axioms(const FusionRing& r, std::size_t associativity_limit) {
  AxiomReport rep;
  const auto& sk = r.skeleton();
  const auto& grp = sk.group();
  const std::size_t n = r.size();
  const std::uint32_t p = sk.metric().p();

  std::string unit_fail, grading_fail, fp_fail, dual_fail;
  for (std::size_t x = 0; x < n && unit_fail.empty(); ++x) {
    const auto a = r.product(r.unit(), x), b = r.product(x, r.unit());
    if (a.size() != 1 || a[0].label != x || a[0].mult != 1 || b.size() != 1 || b[0].label != x || b[0].mult != 1)
      unit_fail = "unit fails on " + r.label_name(x);
  }
  const std::uint64_t total = ipow(p, sk.metric().rank());
  for (std::size_t g = 0; g < sk.order() && grading_fail.empty(); ++g)
    if (sk.simple_count(g) * ipow(p, sk.component(g).d) != total)
      grading_fail = "component " + std::to_string(g) + " has FP-dimension different from |A|";

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto prod = r.product(x, y);
      const std::size_t k = grp.mul(r.label(x).g, r.label(y).g);
      unsigned __int128 sum = 0;
      for (const auto& t : prod) {
        if (grading_fail.empty() && r.label(t.label).g != k)
          grading_fail = r.label_name(x) + " * " + r.label_name(y) + " leaves the component of gh";
        sum += t.mult;
      }
      if (fp_fail.empty()) {
        const unsigned __int128 lhs = sum * sum * r.fp_dim_squared(r.component_begin(k));
        const unsigned __int128 rhs = static_cast<unsigned __int128>(r.fp_dim_squared(x)) * r.fp_dim_squared(y);
        if (lhs != rhs) fp_fail = "FPdim is not multiplicative on " + r.label_name(x) + " * " + r.label_name(y);
      }
    }

  for (std::size_t x = 0; x < n && dual_fail.empty(); ++x) {
    const std::size_t gi = grp.inv(r.label(x).g);
    std::size_t found = 0, which = n;
    for (std::size_t y = r.component_begin(gi); y < r.component_end(gi); ++y) {
      const auto prod = r.product(x, y);
      if (!prod.empty() && prod[0].label == r.unit()) {
        if (prod[0].mult != 1) dual_fail = "unit multiplicity above 1 in " + r.label_name(x) + " * " + r.label_name(y);
        ++found;
        which = y;
      }
    }
    if (!dual_fail.empty()) break;
    if (found != 1)
      dual_fail = r.label_name(x) + " has " + std::to_string(found) + " duals";
    else if (which != r.dual(x) || r.dual(r.dual(x)) != x)
      dual_fail = "duality is not an involution at " + r.label_name(x);
  }

  rep.results.push_back(result("unit", unit_fail));
  rep.results.push_back(result("grading", grading_fail));
  rep.results.push_back(result("fp_dimension", fp_fail));
  rep.results.push_back(result("duality", dual_fail));
  if (n <= associativity_limit)
    rep.results.push_back(result("associativity", check_associativity(r)));
  else
    rep.results.push_back({"associativity", AxiomStatus::skipped,
                           std::to_string(n) + " labels exceed the exhaustive limit " + std::to_string(associativity_limit)});
  return rep;
}

bool matches_tambara_yamagami(const FusionRing& r) {
  const auto& sk = r.skeleton();
  if (sk.metric().rank() != 1 || sk.order() != 2) return false;
  const auto& f = sk.metric().field();
  if (sk.group().action(1) != Matrix::scalar(f, 1, f.neg(1))) return false;
  const std::uint32_t p = f.p();
  if (r.size() != p + 1) return false;
  const std::size_t x = r.component_begin(1);
  auto e = [&](Residue a) { return r.find(0, {a}); };
  auto single = [](const std::vector<Term>& t, std::size_t l) {
    return t.size() == 1 && t[0].label == l && t[0].mult == 1;
  };
  for (Residue a = 0; a < p; ++a) {
    for (Residue b = 0; b < p; ++b)
      if (!single(r.product(e(a), e(b)), e(f.add(a, b)))) return false;
    if (!single(r.product(e(a), x), x) || !single(r.product(x, e(a)), x)) return false;
  }
  const auto xx = r.product(x, x);
  if (xx.size() != p) return false;
  for (Residue a = 0; a < p; ++a)
    if (xx[a].label != e(a) || xx[a].mult != 1) return false;
  return r.fp_dim_squared(x) == p;
}

}  // namespace reflcat::fusion
