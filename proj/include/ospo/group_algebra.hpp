#pragma once

#include <map>
#include <string>

#include "ospo/module.hpp"
#include "ospo/rational.hpp"
#include "ospo/symmetric_group.hpp"
#include "ospo/tableau.hpp"
#include "ospo/tensor.hpp"

namespace ospo {

// Element of Q S_k; the product p*q means "p then q", matching diagram
// multiplication and the right action on tensors.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(int k = 0) : k_(k) {}
  static GroupAlgebraElement unit(int k);

  int k() const { return k_; }
  const std::map<Perm, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Perm& p, const Rat& c);
  GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator*(const Rat& c) const;
  GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;
  std::string str() const;

 private:
  int k_;
  std::map<Perm, Rat> terms_;
};

struct YoungSymmetrizer {
  GroupAlgebraElement s;  // (sum sgn(row) row)(sum col)
  Rat h;                  // s*s = h s
  GroupAlgebraElement y;  // s / h
};

// labels of T are 1-based slots in 1..k
YoungSymmetrizer young_symmetrizer(const StandardTableau& T, int k);

TensorVector act_group_algebra(const GroupAlgebraElement& g, const TensorVector& w, const ModuleData& M);

}  // namespace ospo
