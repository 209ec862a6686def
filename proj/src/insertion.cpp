#include "ospo/insertion.hpp"

#include <functional>
#include <stdexcept>

namespace ospo {

std::pair<int, int> hole_position(const Filling& T) {
  for (std::size_t i = 0; i < T.size(); ++i)
    for (std::size_t j = 0; j < T[i].size(); ++j)
      if (T[i][j] == kHole) return {static_cast<int>(i), static_cast<int>(j)};
  return {-1, -1};
}

bool hole_at_corner(const Filling& T) {
  auto [i, j] = hole_position(T);
  if (i < 0) return false;
  if (j + 1 != static_cast<int>(T[i].size())) return false;
  return i + 1 == static_cast<int>(T.size()) || static_cast<int>(T[i + 1].size()) <= j;
}

bool in_se(const Filling& T, const Alphabet& A) { return hole_at_corner(T) && is_punctured_spo(T, A); }

namespace {

Filling swapped(Filling T, int i, int j, int p, int q) {
  std::swap(T[i][j], T[p][q]);
  return T;
}

}  // namespace

bool in_nw(const Filling& T, const Alphabet& A) {
  auto [i, j] = hole_position(T);
  if (i < 0 || j != 0 || !is_punctured_spo(T, A)) return false;
  return i == 0 || !is_punctured_spo(swapped(T, i, j, i - 1, j), A);
}

Filling remove_corner_hole(const Filling& T) {
  if (!hole_at_corner(T)) throw std::invalid_argument("hole is not at a corner");
  Filling out = T;
  auto [i, j] = hole_position(T);
  out[i].pop_back();
  if (out[i].empty()) out.erase(out.begin() + i);
  (void)j;
  return out;
}

Filling se_step(const Filling& T, const Alphabet& A) {
  auto [i, j] = hole_position(T);
  if (i < 0) throw std::invalid_argument("no empty box");
  if (hole_at_corner(T)) throw std::invalid_argument("se step on a tableau whose hole is at a corner");
  bool has_e = j + 1 < static_cast<int>(T[i].size());
  bool has_s = i + 1 < static_cast<int>(T.size()) && j < static_cast<int>(T[i + 1].size());
  bool south;
  if (has_e && has_s) {
    int c = T[i][j + 1], d = T[i + 1][j];
    if (c == d)
      south = A.is_b0(c);
    else
      south = c > d;
  } else {
    south = has_s;
  }
  Filling out = south ? swapped(T, i, j, i + 1, j) : swapped(T, i, j, i, j + 1);
  if (!is_punctured_spo(out, A)) throw std::logic_error("se step left the punctured tableaux: " + filling_str(T, A));
  return out;
}

Filling nw_step(const Filling& T, const Alphabet& A) {
  auto [i, j] = hole_position(T);
  if (i < 0) throw std::invalid_argument("no empty box");
  bool has_n = i > 0;
  bool has_w = j > 0;
  if (!has_n && !has_w) throw std::invalid_argument("nw step at the top-left box");
  bool north;
  if (has_n && has_w) {
    int a = T[i - 1][j], b = T[i][j - 1];
    if (a == b)
      north = A.is_b0(a);
    else
      north = a > b;
  } else {
    north = has_n;
  }
  Filling out = north ? swapped(T, i, j, i - 1, j) : swapped(T, i, j, i, j - 1);
  if (!is_punctured_spo(out, A)) throw std::logic_error("nw step left the punctured tableaux: " + filling_str(T, A));
  return out;
}

Filling jeu(const Filling& T, const Alphabet& A, std::vector<Filling>* trace) {
  if (!in_nw(T, A)) throw std::invalid_argument("jeu needs a punctured tableau in NW: " + filling_str(T, A));
  Filling cur = T;
  while (!hole_at_corner(cur)) {
    cur = se_step(cur, A);
    if (trace) trace->push_back(cur);
  }
  return cur;
}

Filling injeu(const Filling& T, const Alphabet& A, std::vector<Filling>* trace) {
  if (!in_se(T, A)) throw std::invalid_argument("injeu needs a punctured tableau in SE: " + filling_str(T, A));
  Filling cur = T;
  while (!in_nw(cur, A)) {
    cur = nw_step(cur, A);
    if (trace) trace->push_back(cur);
  }
  return cur;
}

Filling insert_letter(int a, const Filling& T0, const Alphabet& A, std::vector<Filling>* trace) {
  if (a < 0 || a >= A.size()) throw std::invalid_argument("letter out of range");
  Filling T = T0;
  int b = a, i = 0, j = 0;
  auto done = [&](Filling out) {
    if (trace) trace->push_back(out);
    if (!is_spo_tableau(out, A)) throw std::logic_error("insertion produced an invalid tableau: " + filling_str(out, A));
    return out;
  };
  for (;;) {
    if (A.is_b0(b)) {
      if (i == static_cast<int>(T.size())) {
        T.push_back({b});
        return done(T);
      }
      auto& row = T[i];
      int ti = A.t(1) + 2 * i;  // t_{i+1}
      if (i < A.r && b == ti) {
        for (std::size_t q = 0; q < row.size(); ++q)
          if (row[q] == ti + 1) {
            row[q] = ti;
            row[0] = kHole;
            if (trace) trace->push_back(T);
            return done(remove_corner_hole(jeu(T, A, trace)));
          }
      }
      std::size_t q = 0;
      while (q < row.size() && row[q] <= b) ++q;
      if (q == row.size()) {
        row.push_back(b);
        return done(T);
      }
      std::swap(b, row[q]);
      if (trace) trace->push_back(T);
      i = i + 1;
      j = static_cast<int>(q) + 1;
    } else {
      std::size_t p = 0;
      while (p < T.size() && j < static_cast<int>(T[p].size()) && T[p][j] <= b) ++p;
      if (p < T.size() && j < static_cast<int>(T[p].size())) {
        std::swap(b, T[p][j]);
        if (trace) trace->push_back(T);
        i = static_cast<int>(p) + 1;
        j = j + 1;
        continue;
      }
      // adjoin at the foot of column j
      if (p == T.size()) {
        if (j != 0) throw std::logic_error("column insertion fell off the shape");
        T.push_back({b});
      } else {
        if (static_cast<int>(T[p].size()) != j || (p > 0 && static_cast<int>(T[p - 1].size()) <= j))
          throw std::logic_error("column insertion fell off the shape");
        T[p].push_back(b);
      }
      return done(T);
    }
  }
}

InsertionResult insert_word(const std::vector<int>& w, const Alphabet& A, std::vector<std::vector<Filling>>* trace) {
  InsertionResult res;
  res.chain.push_back(Partition());
  for (int a : w) {
    std::vector<Filling> steps;
    res.T = insert_letter(a, res.T, A, trace ? &steps : nullptr);
    res.chain.push_back(filling_shape(res.T));
    if (trace) trace->push_back(std::move(steps));
  }
  return res;
}

namespace {

// general deletion step; b was displaced from (i, j), the box at (i, j) now holding old content
int bump_out(Filling& T, int b, int i, int j, const Alphabet& A, std::vector<Filling>* trace) {
  for (;;) {
    if (A.is_b0(b)) {
      if (i == 0) return b;
      auto& row = T[i - 1];
      int q = -1;
      for (int c = static_cast<int>(row.size()) - 1; c >= 0; --c)
        if (row[c] < b) {
          q = c;
          break;
        }
      if (q < 0) throw std::invalid_argument("inconsistent pair: nothing smaller in the row above");
      std::swap(b, row[q]);
      i = i - 1;
      j = q;
    } else {
      if (j == 0) return b;
      int p = -1;
      for (int rr = static_cast<int>(T.size()) - 1; rr >= 0; --rr)
        if (j - 1 < static_cast<int>(T[rr].size()) && T[rr][j - 1] < b) {
          p = rr;
          break;
        }
      if (p < 0) throw std::invalid_argument("inconsistent pair: nothing smaller in the column to the left");
      std::swap(b, T[p][j - 1]);
      i = p;
      j = j - 1;
    }
    if (trace) trace->push_back(T);
  }
}

// the single box where two shapes differ, and whether it was added
std::pair<std::pair<int, int>, bool> box_difference(const Partition& from, const Partition& to) {
  int rows = std::max(from.length(), to.length());
  int diffs = 0;
  std::pair<int, int> box{-1, -1};
  bool added = false;
  for (int i = 0; i < rows; ++i) {
    int d = to[i] - from[i];
    if (d == 0) continue;
    if (d != 1 && d != -1) return {{-1, -1}, false};
    ++diffs;
    added = d == 1;
    box = {i, added ? to[i] - 1 : from[i] - 1};
  }
  if (diffs != 1) return {{-1, -1}, false};
  return {box, added};
}

}  // namespace

DeletionStep delete_last(const Filling& T0, const UpDownChain& chain, const Alphabet& A, std::vector<Filling>* trace) {
  if (chain.size() < 2) throw std::invalid_argument("nothing to delete");
  if (!is_spo_tableau(T0, A) && !T0.empty()) throw std::invalid_argument("not an spo-tableau");
  const Partition& prev = chain[chain.size() - 2];
  const Partition& cur = chain.back();
  if (filling_shape(T0) != cur) throw std::invalid_argument("tableau shape does not match the last shape");
  auto [box, added] = box_difference(prev, cur);
  if (box.first < 0) throw std::invalid_argument("consecutive shapes differ by more than one box");
  Filling T = T0;
  int letter;
  if (added) {
    int b = T[box.first][box.second];
    T[box.first].pop_back();
    if (T[box.first].empty()) T.erase(T.begin() + box.first);
    if (trace) trace->push_back(T);
    letter = bump_out(T, b, box.first, box.second, A, trace);
  } else {
    Filling P = T;
    if (box.first == static_cast<int>(P.size())) P.push_back({});
    if (static_cast<int>(P[box.first].size()) != box.second)
      throw std::invalid_argument("removed box is not a corner of the previous shape");
    P[box.first].push_back(kHole);
    if (trace) trace->push_back(P);
    if (!in_se(P, A)) throw std::invalid_argument("inconsistent pair: the punctured tableau is not in SE");
    P = injeu(P, A, trace);
    int i = hole_position(P).first;
    if (i >= A.r) throw std::invalid_argument("inconsistent pair: the hole reached row " + std::to_string(i + 1) +
                                              " which has no symplectic letter");
    int ti = A.t(i + 1);
    P[i][0] = ti;
    int last = -1;
    for (std::size_t q = 0; q < P[i].size(); ++q)
      if (P[i][q] == ti) last = static_cast<int>(q);
    P[i][last] = ti + 1;
    if (trace) trace->push_back(P);
    T = P;
    letter = bump_out(T, ti, i, 0, A, trace);
  }
  if (!T.empty() && !is_spo_tableau(T, A)) throw std::invalid_argument("inconsistent pair: deletion left an invalid tableau");
  UpDownChain rest(chain.begin(), chain.end() - 1);
  if (filling_shape(T) != rest.back()) throw std::invalid_argument("inconsistent pair: shape mismatch after deletion");
  return {T, rest, letter};
}

std::vector<int> delete_word(Filling T, UpDownChain chain, const Alphabet& A) {
  std::vector<int> w(chain.size() - 1);
  for (std::size_t k = w.size(); k-- > 0;) {
    auto step = delete_last(T, chain, A);
    w[k] = step.letter;
    T = std::move(step.T);
    chain = std::move(step.chain);
  }
  return w;
}

bool is_up_down(const UpDownChain& chain, int r, int n) {
  if (chain.empty() || !chain.front().empty()) return false;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!chain[i].is_hook(r, n)) return false;
    if (i > 0 && box_difference(chain[i - 1], chain[i]).first.first < 0) return false;
  }
  return true;
}

std::vector<UpDownChain> up_down_tableaux(int r, int n, int k) {
  std::vector<UpDownChain> out;
  UpDownChain cur{Partition()};
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == k + 1) {
      out.push_back(cur);
      return;
    }
    const Partition& p = cur.back();
    std::vector<Partition> next;
    for (int i = 0; i <= p.length(); ++i) {
      std::vector<int> parts = p.parts();
      if (i == p.length()) parts.push_back(0);
      if (i == 0 || parts[i] < parts[i - 1]) {
        parts[i] += 1;
        next.emplace_back(parts);
      }
    }
    for (int i = 0; i < p.length(); ++i) {
      if (p[i] > p[i + 1]) {
        std::vector<int> parts = p.parts();
        parts[i] -= 1;
        next.emplace_back(parts);
      }
    }
    for (auto& q : next) {
      if (!q.is_hook(r, n)) continue;
      cur.push_back(q);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

long long count_ud(const Partition& lambda, int r, int n, int k) {
  long long c = 0;
  for (const auto& ch : up_down_tableaux(r, n, k))
    if (ch.back() == lambda) ++c;
  return c;
}

CountingReport verify_counting(int r, int n, int k) {
  CountingReport rep;
  Alphabet A{r, n};
  rep.words = 1;
  for (int i = 0; i < k; ++i) rep.words *= A.size();
  std::map<Partition, long long> ud;
  for (const auto& ch : up_down_tableaux(r, n, k)) ++ud[ch.back()];
  for (const auto& [lam, c] : ud) {
    long long s = count_spo(lam, A);
    rep.breakdown[lam] = {c, s};
    rep.pairs += c * s;
  }
  return rep;
}

BijectionReport verify_bijection(int r, int n, int k) {
  BijectionReport rep;
  Alphabet A{r, n};
  std::vector<int> w(k, 0);
  auto note = [&](const std::string& s) {
    if (rep.first_failure.empty()) rep.first_failure = s;
  };
  std::function<void(int)> words = [&](int pos) {
    if (pos == k) {
      ++rep.words;
      try {
        auto res = insert_word(w, A);
        auto back = delete_word(res.T, res.chain, A);
        if (back != w) {
          ++rep.word_failures;
          note("word " + letter_word_str(w, A) + " came back as " + letter_word_str(back, A));
        }
      } catch (const std::exception& e) {
        ++rep.word_failures;
        note("word " + letter_word_str(w, A) + ": " + e.what());
      }
      return;
    }
    for (int x = 0; x < A.size(); ++x) {
      w[pos] = x;
      words(pos + 1);
    }
  };
  words(0);
  std::map<Partition, std::vector<Filling>> tabs;
  for (const auto& ch : up_down_tableaux(r, n, k)) {
    auto it = tabs.find(ch.back());
    if (it == tabs.end()) it = tabs.emplace(ch.back(), spo_tableaux(ch.back(), A)).first;
    for (const auto& T : it->second) {
      ++rep.pairs;
      try {
        auto word = delete_word(T, ch, A);
        auto res = insert_word(word, A);
        if (res.T != T || res.chain != ch) {
          ++rep.pair_failures;
          note("pair " + filling_str(T, A) + " " + chain_str(ch) + " does not reinsert to itself");
        }
      } catch (const std::exception& e) {
        ++rep.pair_failures;
        note("pair " + filling_str(T, A) + " " + chain_str(ch) + ": " + e.what());
      }
    }
  }
  return rep;
}

std::string chain_str(const UpDownChain& chain) {
  std::string s = "(";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) s += ",";
    s += chain[i].str();
  }
  return s + ")";
}

}  // namespace ospo
