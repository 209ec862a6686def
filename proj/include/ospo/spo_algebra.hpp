#pragma once

#include <string>
#include <vector>

#include "ospo/module.hpp"
#include "ospo/rational.hpp"
#include "ospo/tensor.hpp"

namespace ospo {

// Homogeneous N x N matrix in gl(V); entries[row][col], acting on columns.
struct SpoMatrix {
  std::string name;
  int degree = 0;
  std::vector<std::vector<Rat>> entries;
  std::vector<int> root;  // weight of the root (zero for Cartan elements)
};

SpoMatrix matrix_unit_combo(const ModuleData& M, const std::string& name,
                            const std::vector<std::tuple<int, int, Rat>>& units);

struct SpoBasis {
  std::vector<SpoMatrix> cartan;
  std::vector<SpoMatrix> roots;
  std::vector<SpoMatrix> simple;  // x_1 .. x_{r+s}, degenerate ones omitted
};

SpoBasis spo_basis(const ModuleData& M);
bool satisfies_spo_condition(const SpoMatrix& x, const ModuleData& M);
bool is_homogeneous(const SpoMatrix& x, const ModuleData& M);
int spo_dimension(const ModuleData& M);  // expected dim of spo(m|n)

TensorVector act_on_tensor(const SpoMatrix& x, const TensorVector& w, const ModuleData& M);

}  // namespace ospo
