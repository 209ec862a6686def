#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ospo {

// Symmetric bicharacter on a grading group of order 1 or 2 (elements 0, 1).
class Bicharacter {
 public:
  static Bicharacter super();    // (-1)^{ab}
  static Bicharacter trivial();  // constant 1, one group element
  static Bicharacter from_table(std::vector<std::vector<int>> table);  // validates

  int order() const { return static_cast<int>(table_.size()); }
  int operator()(int a, int b) const { return table_[a][b]; }
  bool is_super() const { return order() == 2 && table_[1][1] == -1; }
  const std::vector<std::vector<int>>& table() const { return table_; }

 private:
  std::vector<std::vector<int>> table_;
};

enum class BasisKind { T, TStar, U, UStar, UOdd };

struct BasisElement {
  BasisKind kind;
  int index;   // 1-based t_i / u_j index; s+1 for the unpaired u
  int degree;  // grading group element
};

// The module V with homogeneous basis t1,t1*,..,tr,tr*,u1,u1*,..,us,us*,(u_{s+1}).
class ModuleData {
 public:
  static ModuleData build(int r, int s, bool odd, const Bicharacter& beta = Bicharacter::super());
  // n = 2s or 2s+1
  static ModuleData from_rn(int r, int n, const Bicharacter& beta = Bicharacter::super());

  int r() const { return r_; }
  int s() const { return s_; }
  bool odd() const { return odd_; }
  int m() const { return 2 * r_; }
  int n() const { return 2 * s_ + (odd_ ? 1 : 0); }
  int dim() const { return static_cast<int>(basis_.size()); }
  int eta() const { return n() - m(); }
  const Bicharacter& bichar() const { return beta_; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const BasisElement& element(int i) const { return basis_[i]; }

  int degree(int i) const { return basis_[i].degree; }
  int beta(int i, int j) const { return beta_(degree(i), degree(j)); }
  bool is_even_part(int i) const { return beta_(degree(i), degree(i)) == 1; }
  int star(int i) const { return star_[i]; }
  int form(int i, int j) const { return F_[i][j]; }
  int form_inv(int i, int j) const { return Finv_[i][j]; }
  const std::vector<std::vector<int>>& form_matrix() const { return F_; }
  const std::vector<std::vector<int>>& form_inverse() const { return Finv_; }
  int form_partner(int i) const { return star_[i]; }  // only nonzero column of F and F^-1

  // weight coordinates (eps_1..eps_r, delta_1..delta_s)
  std::vector<int> weight(int i) const;
  std::string token(int i) const;
  int index_of(std::string_view token) const;  // accepts v-aliases for B1
  int index_t(int i, bool star) const { return 2 * (i - 1) + (star ? 1 : 0); }
  int index_u(int j, bool star) const { return 2 * r_ + 2 * (j - 1) + (star ? 1 : 0); }
  int index_u_odd() const { return odd_ ? 2 * r_ + 2 * s_ : -1; }
  std::string describe() const;

 private:
  int r_ = 0, s_ = 0;
  bool odd_ = false;
  Bicharacter beta_ = Bicharacter::super();
  std::vector<BasisElement> basis_;
  std::vector<int> star_;
  std::vector<std::vector<int>> F_, Finv_;
};

}  // namespace ospo
