#pragma once

#include <vector>

#include "ospo/laurent.hpp"

namespace ospo {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

LaurentPoly det_cofactor(const PolyMatrix& m);
LaurentPoly det_bareiss(const PolyMatrix& m);
// cofactor up to size 4, fraction-free elimination above
LaurentPoly det_poly(const PolyMatrix& m);

}  // namespace ospo
