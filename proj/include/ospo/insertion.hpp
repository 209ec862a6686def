#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ospo/partition.hpp"
#include "ospo/spo_tableau.hpp"

namespace ospo {

using UpDownChain = std::vector<Partition>;

std::pair<int, int> hole_position(const Filling& T);  // (-1,-1) if none
bool hole_at_corner(const Filling& T);
bool in_se(const Filling& T, const Alphabet& A);
bool in_nw(const Filling& T, const Alphabet& A);
// drop a hole sitting at a corner
Filling remove_corner_hole(const Filling& T);

Filling se_step(const Filling& T, const Alphabet& A);
Filling nw_step(const Filling& T, const Alphabet& A);
// iterate se (resp. nw) zero or more times until the target set is reached
Filling jeu(const Filling& T, const Alphabet& A, std::vector<Filling>* trace = nullptr);
Filling injeu(const Filling& T, const Alphabet& A, std::vector<Filling>* trace = nullptr);

Filling insert_letter(int a, const Filling& T, const Alphabet& A, std::vector<Filling>* trace = nullptr);

struct InsertionResult {
  Filling T;
  UpDownChain chain;
};
InsertionResult insert_word(const std::vector<int>& w, const Alphabet& A,
                            std::vector<std::vector<Filling>>* trace = nullptr);

struct DeletionStep {
  Filling T;
  UpDownChain chain;
  int letter;
};
// undo the last insertion; throws std::invalid_argument on a pair outside the image
DeletionStep delete_last(const Filling& T, const UpDownChain& chain, const Alphabet& A,
                         std::vector<Filling>* trace = nullptr);
std::vector<int> delete_word(Filling T, UpDownChain chain, const Alphabet& A);

bool is_up_down(const UpDownChain& chain, int r, int n);
std::vector<UpDownChain> up_down_tableaux(int r, int n, int k);  // all shapes
long long count_ud(const Partition& lambda, int r, int n, int k);

struct CountingReport {
  long long words = 0;  // (m+n)^k
  long long pairs = 0;  // sum ud * spo
  std::map<Partition, std::pair<long long, long long>> breakdown;  // shape -> (ud, spo)
  bool passed() const { return words == pairs; }
};
CountingReport verify_counting(int r, int n, int k);

struct BijectionReport {
  long long words = 0, pairs = 0, word_failures = 0, pair_failures = 0;
  std::string first_failure;
  bool passed() const { return word_failures == 0 && pair_failures == 0; }
};
// words -> insert -> delete must return the word; every (T, chain) pair ->
// delete -> insert must return the pair
BijectionReport verify_bijection(int r, int n, int k);

std::string chain_str(const UpDownChain& chain);

}  // namespace ospo
