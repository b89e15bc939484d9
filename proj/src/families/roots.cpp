#include "reflcat/families/roots.hpp"

#include <deque>
#include <set>
#include <string>

#include "reflcat/error.hpp"

namespace reflcat::families {

std::string_view to_string(CoxeterType t) {
  switch (t) {
    case CoxeterType::A:
      return "A";
    case CoxeterType::B:
      return "B";
    case CoxeterType::D:
      return "D";
    case CoxeterType::E6:
      return "E6";
    case CoxeterType::E7:
      return "E7";
    case CoxeterType::E8:
      return "E8";
    default:
      return "F4";
  }
}

namespace {

IntVec unit(std::size_t dim, std::size_t i, std::int64_t c) {
  IntVec v(dim, 0);
  v[i] = c;
  return v;
}

IntVec diff(std::size_t dim, std::size_t i, std::size_t j) {
  IntVec v(dim, 0);
  v[i] = 2;
  v[j] = -2;
  return v;
}

std::int64_t dot(const IntVec& a, const IntVec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

RootData simple_roots(CoxeterType type, unsigned n) {
  RootData r{type, n, {}};
  switch (type) {
    case CoxeterType::A:
      if (n < 1) throw DomainError("A_n needs n >= 1");
      for (unsigned i = 0; i < n; ++i) r.simple.push_back(diff(n + 1, i, i + 1));
      break;
    case CoxeterType::B:
      if (n < 2) throw DomainError("B_n needs n >= 2");
      for (unsigned i = 0; i + 1 < n; ++i) r.simple.push_back(diff(n, i, i + 1));
      r.simple.push_back(unit(n, n - 1, 2));
      break;
    case CoxeterType::D:
      if (n < 3) throw DomainError("D_n needs n >= 3");
      for (unsigned i = 0; i + 1 < n; ++i) r.simple.push_back(diff(n, i, i + 1));
      {
        IntVec v(n, 0);
        v[n - 2] = 2;
        v[n - 1] = 2;
        r.simple.push_back(v);
      }
      break;
    case CoxeterType::E6:
    case CoxeterType::E7:
    case CoxeterType::E8: {
      const unsigned want = type == CoxeterType::E6 ? 6 : type == CoxeterType::E7 ? 7 : 8;
      if (n != want) throw DomainError("E" + std::to_string(want) + " has rank " + std::to_string(want));
      r.simple.push_back({1, -1, -1, -1, -1, -1, -1, 1});
      r.simple.push_back({2, 2, 0, 0, 0, 0, 0, 0});
      r.simple.push_back(diff(8, 1, 0));
      for (unsigned k = 4; k <= 8; ++k) r.simple.push_back(diff(8, k - 2, k - 3));
      r.simple.resize(n);
      break;
    }
    case CoxeterType::F4:
      if (n != 4) throw DomainError("F4 has rank 4");
      r.simple = {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
      break;
  }
  return r;
}

std::vector<IntVec> gram_times4(const RootData& r) {
  std::vector<IntVec> g(r.simple.size(), IntVec(r.simple.size()));
  for (std::size_t i = 0; i < r.simple.size(); ++i)
    for (std::size_t j = 0; j < r.simple.size(); ++j) g[i][j] = dot(r.simple[i], r.simple[j]);
  return g;
}

std::vector<IntVec> root_closure(const RootData& r) {
  std::set<IntVec> seen(r.simple.begin(), r.simple.end());
  std::deque<IntVec> queue(r.simple.begin(), r.simple.end());
  while (!queue.empty()) {
    const IntVec v = queue.front();
    queue.pop_front();
    for (const auto& a : r.simple) {
      const std::int64_t num = 2 * dot(v, a), den = dot(a, a);
      if (num % den) throw InvariantViolation("root system is not crystallographic");
      IntVec w = v;
      for (std::size_t i = 0; i < w.size(); ++i) w[i] -= (num / den) * a[i];
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  return {seen.begin(), seen.end()};
}

std::uint64_t expected_root_count(CoxeterType type, unsigned n) {
  switch (type) {
    case CoxeterType::A:
      return std::uint64_t{n} * (n + 1);
    case CoxeterType::B:
      return 2ull * n * n;
    case CoxeterType::D:
      return 2ull * n * (n - 1);
    case CoxeterType::E6:
      return 72;
    case CoxeterType::E7:
      return 126;
    case CoxeterType::E8:
      return 240;
    default:
      return 48;
  }
}

std::uint64_t weyl_order(CoxeterType type, unsigned n) {
  std::uint64_t fact = 1;
  for (unsigned i = 2; i <= n; ++i) fact *= i;
  switch (type) {
    case CoxeterType::A:
      return fact * (n + 1);
    case CoxeterType::B:
      return (std::uint64_t{1} << n) * fact;
    case CoxeterType::D:
      return (std::uint64_t{1} << (n - 1)) * fact;
    case CoxeterType::E6:
      return 51840;
    case CoxeterType::E7:
      return 2903040;
    case CoxeterType::E8:
      return 696729600;
    default:
      return 1152;
  }
}

}  // namespace reflcat::families
