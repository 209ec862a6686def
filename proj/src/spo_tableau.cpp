#include "ospo/spo_tableau.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace ospo {

std::string Alphabet::token(int x) const {
  if (x < 0 || x >= size()) throw std::invalid_argument("letter out of range");
  if (is_b0(x)) return "t" + std::to_string(x / 2 + 1) + (x % 2 ? "*" : "");
  return "v" + std::to_string(x - 2 * r + 1);
}

int Alphabet::parse(std::string_view tok) const {
  if (tok.size() < 2 || (tok[0] != 't' && tok[0] != 'v')) throw std::invalid_argument("bad letter: " + std::string(tok));
  bool star = tok.back() == '*';
  std::string_view digits = tok.substr(1, tok.size() - 1 - (star ? 1 : 0));
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
    throw std::invalid_argument("bad letter: " + std::string(tok));
  int i = std::stoi(std::string(digits));
  if (tok[0] == 't') {
    if (i < 1 || i > r) throw std::invalid_argument("letter out of range: " + std::string(tok));
    return t(i, star);
  }
  if (star || i < 1 || i > n) throw std::invalid_argument("letter out of range: " + std::string(tok));
  return v(i);
}

Partition filling_shape(const Filling& T) {
  std::vector<int> parts;
  for (auto& row : T) parts.push_back(static_cast<int>(row.size()));
  return Partition(parts);
}

namespace {

bool rows_form_partition(const Filling& T) {
  for (std::size_t i = 0; i < T.size(); ++i) {
    if (T[i].empty()) return false;
    if (i > 0 && T[i].size() > T[i - 1].size()) return false;
  }
  return true;
}

}  // namespace

bool is_spo_tableau(const Filling& T, const Alphabet& A) {
  if (!rows_form_partition(T)) return false;
  std::size_t prev_s = SIZE_MAX;
  for (std::size_t i = 0; i < T.size(); ++i) {
    const auto& row = T[i];
    std::size_t s = 0;
    while (s < row.size() && row[s] >= 0 && row[s] < A.size() && A.is_b0(row[s])) ++s;
    if (s > prev_s) return false;
    prev_s = s;
    for (std::size_t j = 0; j < row.size(); ++j) {
      int x = row[j];
      if (x < 0 || x >= A.size()) return false;
      if (j >= s && A.is_b0(x)) return false;
      if (j < s) {
        if (A.t_row(x) < static_cast<int>(i) + 1) return false;
        if (j > 0 && row[j - 1] > x) return false;
        if (i > 0 && T[i - 1][j] >= x) return false;
      } else {
        if (j > s && row[j - 1] >= x) return false;
        if (i > 0 && !A.is_b0(T[i - 1][j]) && T[i - 1][j] > x) return false;
      }
    }
  }
  return true;
}

bool is_punctured_spo(const Filling& T, const Alphabet& A) {
  if (!rows_form_partition(T)) return false;
  int holes = 0;
  for (const auto& row : T)
    for (int x : row) {
      if (x == kHole)
        ++holes;
      else if (x < 0 || x >= A.size())
        return false;
    }
  if (holes != 1) return false;
  // the order conditions between every pair of filled boxes in a row or column;
  // the hole constrains nothing
  for (std::size_t i = 0; i < T.size(); ++i)
    for (std::size_t j = 0; j < T[i].size(); ++j) {
      int x = T[i][j];
      if (x == kHole) continue;
      if (A.is_b0(x) && A.t_row(x) < static_cast<int>(i) + 1) return false;
      for (std::size_t q = j + 1; q < T[i].size(); ++q) {
        int y = T[i][q];
        if (y == kHole) continue;
        if (A.is_b0(y) ? (!A.is_b0(x) || x > y) : (!A.is_b0(x) && x >= y)) return false;
      }
      for (std::size_t p = i + 1; p < T.size() && j < T[p].size(); ++p) {
        int y = T[p][j];
        if (y == kHole) continue;
        if (A.is_b0(y) ? (!A.is_b0(x) || x >= y) : (!A.is_b0(x) && x > y)) return false;
      }
    }
  return true;
}

std::string filling_str(const Filling& T, const Alphabet& A) {
  std::string s = "[";
  for (std::size_t i = 0; i < T.size(); ++i) {
    if (i) s += ",";
    s += "[";
    for (std::size_t j = 0; j < T[i].size(); ++j) {
      if (j) s += ",";
      s += T[i][j] == kHole ? "_" : A.token(T[i][j]);
    }
    s += "]";
  }
  return s + "]";
}

Filling parse_filling(std::string_view text, const Alphabet& A) {
  Filling T;
  std::vector<int> row;
  std::string tok;
  int depth = 0;
  auto flush = [&] {
    if (tok.empty()) return;
    row.push_back(tok == "_" ? kHole : A.parse(tok));
    tok.clear();
  };
  for (char c : text) {
    if (c == '[') {
      if (++depth > 2) throw std::invalid_argument("tableau nested too deeply");
    } else if (c == ']') {
      flush();
      if (depth == 2) {
        T.push_back(row);
        row.clear();
      }
      if (--depth < 0) throw std::invalid_argument("unbalanced brackets");
    } else if (c == ',' || c == ' ' || c == '"') {
      flush();
    } else {
      if (depth != 2) throw std::invalid_argument("letter outside a row");
      tok += c;
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced brackets");
  while (!T.empty() && T.back().empty()) T.pop_back();
  return T;
}

std::vector<Filling> spo_tableaux(const Partition& shape, const Alphabet& A) {
  std::vector<Filling> out;
  if (!shape.is_hook(A.r, A.n)) return out;
  int rows = shape.length();
  std::vector<int> len(rows, 0);
  Filling cur(rows);
  // letters in increasing order; symplectic ones fill horizontal strips limited
  // to rows <= their index, odd ones fill vertical strips
  std::function<void(int)> rec = [&](int x) {
    if (x == A.size()) {
      for (int i = 0; i < rows; ++i)
        if (len[i] != shape[i]) return;
      out.push_back(cur);
      return;
    }
    std::vector<int> before = len;
    if (A.is_b0(x)) {
      int maxrow = std::min(rows, A.t_row(x));
      std::function<void(int)> place = [&](int i) {
        if (i == maxrow) {
          rec(x + 1);
          return;
        }
        int hi = shape[i];
        if (i > 0) hi = std::min(hi, before[i - 1]);
        for (int v = before[i]; v <= hi; ++v) {
          len[i] = v;
          cur[i].resize(before[i]);
          cur[i].resize(v, x);
          place(i + 1);
        }
        len[i] = before[i];
        cur[i].resize(before[i]);
      };
      place(0);
    } else {
      std::function<void(int)> place = [&](int i) {
        if (i == rows) {
          rec(x + 1);
          return;
        }
        // at most one box per row; the box above may be new too
        place(i + 1);
        int c = before[i];
        if (c < shape[i] && (i == 0 || len[i - 1] > c)) {
          len[i] = c + 1;
          cur[i].push_back(x);
          place(i + 1);
          cur[i].pop_back();
          len[i] = c;
        }
      };
      place(0);
    }
  };
  rec(0);
  return out;
}

long long count_spo(const Partition& shape, const Alphabet& A) {
  return static_cast<long long>(spo_tableaux(shape, A).size());
}

std::vector<int> parse_letter_word(std::string_view text, const Alphabet& A) {
  std::vector<int> w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) w.push_back(A.parse(tok));
  return w;
}

std::string letter_word_str(const std::vector<int>& w, const Alphabet& A) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += A.token(w[i]);
  }
  return s;
}

}  // namespace ospo
