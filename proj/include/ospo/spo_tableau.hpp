#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ospo/partition.hpp"

namespace ospo {

// Letters of the alphabet t1 < t1* < ... < tr < tr* < v1 < ... < vn, coded
// 0..2r+n-1 in that order (the same order as the module basis indices).
struct Alphabet {
  int r = 0, n = 0;
  int size() const { return 2 * r + n; }
  bool is_b0(int x) const { return x < 2 * r; }
  int t(int i, bool star = false) const { return 2 * (i - 1) + (star ? 1 : 0); }
  int v(int j) const { return 2 * r + j - 1; }
  // 1-based row of the smallest symplectic letter allowed in that row
  int t_row(int x) const { return x / 2 + 1; }
  bool is_starred(int x) const { return is_b0(x) && x % 2 == 1; }
  std::string token(int x) const;
  int parse(std::string_view tok) const;  // throws std::invalid_argument
};

constexpr int kHole = -1;

// rows of letters; kHole marks the empty box of a punctured tableau
using Filling = std::vector<std::vector<int>>;

Partition filling_shape(const Filling& T);
bool is_spo_tableau(const Filling& T, const Alphabet& A);
// exactly one hole; the spo order conditions hold between all filled boxes
bool is_punctured_spo(const Filling& T, const Alphabet& A);
std::string filling_str(const Filling& T, const Alphabet& A);  // "[[t1,v2],[t2]]"
Filling parse_filling(std::string_view text, const Alphabet& A);

std::vector<Filling> spo_tableaux(const Partition& shape, const Alphabet& A);
long long count_spo(const Partition& shape, const Alphabet& A);

std::vector<int> parse_letter_word(std::string_view text, const Alphabet& A);
std::string letter_word_str(const std::vector<int>& w, const Alphabet& A);

}  // namespace ospo
