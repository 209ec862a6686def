#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "ospo/partition.hpp"

namespace ospo {

// Filling of a Ferrers diagram by distinct labels, rows and columns increasing.
class StandardTableau {
 public:
  StandardTableau() = default;
  explicit StandardTableau(std::vector<std::vector<int>> rows);  // validates

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int size() const;
  std::vector<int> reading_word() const;  // row by row, left to right
  std::vector<std::vector<int>> columns() const;
  StandardTableau transpose() const;
  std::string str() const;  // "[[1,2],[3]]"

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

std::vector<StandardTableau> standard_tableaux(const Partition& shape, const std::vector<int>& labels);
// all tableaux on the labels whose shape satisfies lambda_{r+1} <= s
std::vector<StandardTableau> hook_standard_tableaux(int r, int s, const std::vector<int>& labels);

// order by the first differing entry in reading order
std::strong_ordering tableau_compare(const StandardTableau& a, const StandardTableau& b);

// top r rows, and the transpose of the remaining rows
std::pair<StandardTableau, StandardTableau> split_subtableaux(const StandardTableau& t, int r, int s);

long long count_standard_tableaux(const Partition& shape);  // hook length formula

}  // namespace ospo
