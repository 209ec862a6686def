#pragma once

#include "ospo/brauer.hpp"
#include "ospo/module.hpp"
#include "ospo/tensor.hpp"

namespace ospo {

// Right action of the generators s_i, e_i on V^{(x)k}
TensorVector psi_generator(const Generator& g, const TensorVector& w, const ModuleData& M);
// through a generator factorization of d
TensorVector psi_diagram(const BrauerDiagram& d, const TensorVector& w, const ModuleData& M);
// through labeled-diagram weights, an independent path
TensorVector psi_diagram_weights(const BrauerDiagram& d, const TensorVector& w, const ModuleData& M);
TensorVector psi_diagram_weights(const BrauerDiagram& d, const Word& a, const ModuleData& M);

// weight of d with top labels a and bottom labels b
Rat diagram_weight(const BrauerDiagram& d, const Word& a, const Word& b, const ModuleData& M);

// invariant tensor of a one-factor
TensorVector phi_onefactor(const OneFactor& f, const ModuleData& M);

// number of crossings of the unfolded diagram, and the pairs of crossing edges
std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> crossings(const OneFactor& f);

}  // namespace ospo
