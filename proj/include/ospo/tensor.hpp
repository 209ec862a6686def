#pragma once

#include <map>
#include <string>
#include <vector>

#include "ospo/module.hpp"
#include "ospo/rational.hpp"

namespace ospo {

using Word = std::vector<int>;  // basis indices

// Sparse linear combination of length-k words over the basis.
class TensorVector {
 public:
  explicit TensorVector(int k = 0) : k_(k) {}
  static TensorVector basis(const Word& w, const Rat& c = Rat(1));

  int k() const { return k_; }
  const std::map<Word, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rat coefficient(const Word& w) const;

  void add(const Word& w, const Rat& c);
  void add_scaled(const TensorVector& o, const Rat& c);
  TensorVector operator+(const TensorVector& o) const;
  TensorVector operator-(const TensorVector& o) const;
  TensorVector operator*(const Rat& c) const;
  friend bool operator==(const TensorVector&, const TensorVector&) = default;

  std::string str(const ModuleData& M) const;

 private:
  int k_;
  std::map<Word, Rat> terms_;
};

Word parse_word(const ModuleData& M, const std::string& text);  // "t1 t1* u1"
std::string word_str(const ModuleData& M, const Word& w);
std::vector<Word> all_words(int dim, int k);

std::vector<int> weight_of(const ModuleData& M, const Word& w);
std::map<std::vector<int>, TensorVector> weight_decompose(const ModuleData& M, const TensorVector& v);

}  // namespace ospo
