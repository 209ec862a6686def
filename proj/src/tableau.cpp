#include "ospo/tableau.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace ospo {

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].empty()) throw std::invalid_argument("empty row inside tableau");
    if (i && rows_[i].size() > rows_[i - 1].size()) throw std::invalid_argument("tableau rows must weakly shorten");
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j && rows_[i][j] <= rows_[i][j - 1]) throw std::invalid_argument("tableau rows must increase");
      if (i && rows_[i][j] <= rows_[i - 1][j]) throw std::invalid_argument("tableau columns must increase");
    }
  }
  auto w = reading_word();
  std::sort(w.begin(), w.end());
  if (std::adjacent_find(w.begin(), w.end()) != w.end()) throw std::invalid_argument("repeated tableau label");
}

Partition StandardTableau::shape() const {
  std::vector<int> p;
  for (auto& r : rows_) p.push_back(static_cast<int>(r.size()));
  return Partition(p);
}

int StandardTableau::size() const { return shape().size(); }

std::vector<int> StandardTableau::reading_word() const {
  std::vector<int> w;
  for (auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
  return w;
}

std::vector<std::vector<int>> StandardTableau::columns() const {
  std::vector<std::vector<int>> cols(rows_.empty() ? 0 : rows_[0].size());
  for (auto& r : rows_)
    for (std::size_t j = 0; j < r.size(); ++j) cols[j].push_back(r[j]);
  return cols;
}

StandardTableau StandardTableau::transpose() const { return StandardTableau(columns()); }

std::string StandardTableau::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    os << (i ? "," : "") << '[';
    for (std::size_t j = 0; j < rows_[i].size(); ++j) os << (j ? "," : "") << rows_[i][j];
    os << ']';
  }
  os << ']';
  return os.str();
}

std::vector<StandardTableau> standard_tableaux(const Partition& shape, const std::vector<int>& labels) {
  if (shape.size() != static_cast<int>(labels.size()))
    throw std::invalid_argument("label count does not match the shape size");
  std::vector<int> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  std::vector<StandardTableau> out;
  std::vector<std::vector<int>> rows(shape.length());
  // place labels in increasing order at addable cells inside the shape
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == sorted.size()) {
      out.emplace_back(rows);
      return;
    }
    for (int i = 0; i < shape.length(); ++i) {
      int len = static_cast<int>(rows[i].size());
      if (len >= shape[i]) continue;
      if (i && static_cast<int>(rows[i - 1].size()) <= len) continue;
      rows[i].push_back(sorted[idx]);
      rec(idx + 1);
      rows[i].pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(),
            [](auto& a, auto& b) { return tableau_compare(a, b) == std::strong_ordering::less; });
  return out;
}

std::vector<StandardTableau> hook_standard_tableaux(int r, int s, const std::vector<int>& labels) {
  std::vector<StandardTableau> out;
  for (auto& p : partitions_of(static_cast<int>(labels.size()))) {
    if (!p.is_hook(r, s)) continue;
    for (auto& t : standard_tableaux(p, labels)) out.push_back(t);
  }
  return out;
}

std::strong_ordering tableau_compare(const StandardTableau& a, const StandardTableau& b) {
  if (a.shape() != b.shape()) throw std::invalid_argument("comparing tableaux of different shapes");
  auto wa = a.reading_word(), wb = b.reading_word();
  for (std::size_t i = 0; i < wa.size(); ++i)
    if (wa[i] != wb[i]) return wa[i] <=> wb[i];
  return std::strong_ordering::equal;
}

std::pair<StandardTableau, StandardTableau> split_subtableaux(const StandardTableau& t, int r, int s) {
  if (!t.shape().is_hook(r, s)) throw std::invalid_argument("tableau shape is not an (r,s)-hook");
  auto& rows = t.rows();
  std::vector<std::vector<int>> top, bottom;
  for (std::size_t i = 0; i < rows.size(); ++i) (static_cast<int>(i) < r ? top : bottom).push_back(rows[i]);
  StandardTableau lower(bottom);
  return {StandardTableau(top), lower.transpose()};
}

long long count_standard_tableaux(const Partition& shape) {
  Partition c = shape.conjugate();
  long long num = factorial(shape.size()), den = 1;
  for (int i = 0; i < shape.length(); ++i)
    for (int j = 0; j < shape[i]; ++j) den *= (shape[i] - j - 1) + (c[j] - i - 1) + 1;
  return num / den;
}

}  // namespace ospo
