#pragma once

#include "reflcat/cohomology/gmodule.hpp"
#include "reflcat/quad/space.hpp"

namespace reflcat::cohomology {

// Matrix of the exponent form (Q(x+y) - Q(x) - Q(y)) / 2 in the standard basis.
Matrix beta_from_q(const quad::QuadraticSpace& s);

// 4-cochain with trivial F_p coefficients (on m.trivial_companion()):
// (x1, x2, x3, x4) -> beta(L(x1, x2), (x1 x2) . L'(x3, x4)).
// DomainError unless both inputs are 2-cocycles.
Cochain cup_product(const GModule& m, const Cochain& l, const Cochain& l2, const Matrix& beta);
Cochain cup_square(const GModule& m, const Cochain& l, const Matrix& beta);

}  // namespace reflcat::cohomology
