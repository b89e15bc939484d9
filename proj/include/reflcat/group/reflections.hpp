#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "reflcat/ff/matrix.hpp"
#include "reflcat/quad/space.hpp"

namespace reflcat::group {

enum class AxisFilter { all, square_axis, nonsquare_axis };

std::string_view to_string(AxisFilter f);

// Anisotropic axes up to scalars (first nonzero coordinate 1), in index order,
// keeping those whose Q-value lies in the requested square class.
std::vector<ff::Vec> reflection_axes(const quad::QuadraticSpace& s, AxisFilter filter,
                                     std::uint64_t cap = quad::kEnumerationCap);
std::vector<ff::Matrix> reflections_in(const quad::QuadraticSpace& s, AxisFilter filter,
                                       std::uint64_t cap = quad::kEnumerationCap);

// An isometry of order two fixing a hyperplane pointwise.
bool is_reflection(const quad::QuadraticSpace& s, const ff::Matrix& m);

}  // namespace reflcat::group
