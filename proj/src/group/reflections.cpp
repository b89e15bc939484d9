#include "reflcat/group/reflections.hpp"

#include <string>

#include "reflcat/error.hpp"
#include "reflcat/ff/linalg.hpp"

namespace reflcat::group {

std::string_view to_string(AxisFilter f) {
  switch (f) {
    case AxisFilter::square_axis:
      return "square_axis";
    case AxisFilter::nonsquare_axis:
      return "nonsquare_axis";
    default:
      return "all";
  }
}

std::vector<ff::Vec> reflection_axes(const quad::QuadraticSpace& s, AxisFilter filter, std::uint64_t cap) {
  const std::uint32_t p = s.p();
  const std::size_t n = s.dim();
  if (!quad::vector_count(p, n, cap))
    throw ResourceError("reflection enumeration needs p^dim <= " + std::to_string(cap));
  const auto& f = s.field();
  std::vector<ff::Vec> out;
  for (std::size_t lead = 0; lead < n; ++lead) {
    const std::uint64_t tail = *quad::vector_count(p, n - lead - 1, cap);
    for (std::uint64_t t = 0; t < tail; ++t) {
      ff::Vec a(lead, 0);
      a.push_back(1);
      const ff::Vec rest = quad::vector_from_index(p, n - lead - 1, t);
      a.insert(a.end(), rest.begin(), rest.end());
      const ff::Residue qa = s.q(a);
      if (qa == 0) continue;
      const bool sq = f.is_square(qa);
      if (filter == AxisFilter::square_axis && !sq) continue;
      if (filter == AxisFilter::nonsquare_axis && sq) continue;
      out.push_back(std::move(a));
    }
  }
  return out;
}

std::vector<ff::Matrix> reflections_in(const quad::QuadraticSpace& s, AxisFilter filter, std::uint64_t cap) {
  std::vector<ff::Matrix> out;
  for (const auto& a : reflection_axes(s, filter, cap)) out.push_back(s.reflection(a));
  return out;
}

bool is_reflection(const quad::QuadraticSpace& s, const ff::Matrix& m) {
  if (m.rows() != s.dim() || m.cols() != s.dim()) return false;
  const ff::Matrix id = ff::Matrix::identity(s.field(), s.dim());
  return s.is_isometry(m) && m * m == id && ff::rank(m - id) == 1 && m.det() == s.field().neg(1);
}

}  // namespace reflcat::group
