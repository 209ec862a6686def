#pragma once

#include <utility>
#include <vector>

#include "ospo/brauer.hpp"
#include "ospo/group_algebra.hpp"
#include "ospo/module.hpp"
#include "ospo/spo_algebra.hpp"
#include "ospo/tableau.hpp"
#include "ospo/tensor.hpp"

namespace ospo {

using ContractionPattern = std::vector<std::pair<int, int>>;  // (p_i, q_i), 1-based

BrauerDiagram contraction_chain(const ContractionPattern& pq, int k);
// disjoint pairs p < q with the pairs listed by increasing p
std::vector<ContractionPattern> contraction_patterns(int k, int j);
std::vector<int> free_slots(const ContractionPattern& pq, int k);

// the simple tensor w_{T,p,q}
Word maximal_seed(const ContractionPattern& pq, const StandardTableau& T, bool circ, const ModuleData& M, int k);
TensorVector maximal_vector(const ContractionPattern& pq, const StandardTableau& T, bool circ,
                            const ModuleData& M, int k);
// weight predicted from the shape of T
std::vector<int> expected_weight(const Partition& lambda, bool circ, const ModuleData& M);
bool circ_applies(const Partition& lambda, const ModuleData& M);

bool is_maximal(const TensorVector& v, const ModuleData& M);
bool is_maximal(const TensorVector& v, const ModuleData& M, const SpoBasis& basis);

struct MaximalEntry {
  ContractionPattern pq;
  StandardTableau T;
  bool circ;
  TensorVector vec;
};
struct MaximalFamily {
  std::vector<MaximalEntry> entries;
  int count = 0;
  int rank = 0;
};
// every w c y over all patterns and hook tableaux (no circ variants)
MaximalFamily maximal_family(int k, const ModuleData& M);

}  // namespace ospo
