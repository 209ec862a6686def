#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "ospo/insertion.hpp"
#include "ospo/json_io.hpp"

using namespace ospo;

namespace {

Filling F(const std::string& s, const Alphabet& A) { return parse_filling(s, A); }

// every filling of the shape, checked box by box from the definition
long long count_brute(const Partition& shape, const Alphabet& A) {
  Filling T(shape.length());
  for (int i = 0; i < shape.length(); ++i) T[i].assign(shape[i], 0);
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < shape.length(); ++i)
    for (int j = 0; j < shape[i]; ++j) cells.emplace_back(i, j);
  long long n = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == cells.size()) {
      n += is_spo_tableau(T, A);
      return;
    }
    auto [i, j] = cells[c];
    for (int x = 0; x < A.size(); ++x) {
      T[i][j] = x;
      rec(c + 1);
    }
  };
  rec(0);
  return n;
}

// every way of emptying one box of every tableau up to the given size
std::vector<Filling> punctured(const Alphabet& A, int max_boxes) {
  std::set<Filling> out;
  for (const auto& lam : partitions_up_to(max_boxes)) {
    if (lam.empty()) continue;
    for (const auto& T : spo_tableaux(lam, A))
      for (int i = 0; i < lam.length(); ++i)
        for (int j = 0; j < lam[i]; ++j) {
          Filling P = T;
          P[i][j] = kHole;
          if (is_punctured_spo(P, A)) out.insert(P);
        }
  }
  return {out.begin(), out.end()};
}

}  // namespace

TEST_CASE("alphabet tokens") {
  Alphabet A{2, 3};
  CHECK(A.size() == 7);
  CHECK(A.token(A.t(2, true)) == "t2*");
  CHECK(A.parse("v3") == A.v(3));
  CHECK_THROWS(A.parse("v4"));
  CHECK_THROWS(A.parse("t3"));
  CHECK(parse_letter_word("t1 v1 t2*", A) == std::vector<int>{0, 4, 3});
}

TEST_CASE("tableau conditions") {
  Alphabet A{4, 4};
  auto big = F("[[t1,t1*,t2,v1,v3],[t2,t2*,t3,v2],[t3*,t4,v1],[v1,v2],[v2]]", A);
  CHECK(is_spo_tableau(big, A));
  CHECK(is_spo_tableau(Filling{}, A));
  CHECK_FALSE(is_spo_tableau(F("[[v1,v1]]", A), A));
  CHECK(is_spo_tableau(F("[[v1],[v1]]", A), A));
  CHECK_FALSE(is_spo_tableau(F("[[t1],[t1]]", A), A));
  CHECK(is_spo_tableau(F("[[t1,t1]]", A), A));
  CHECK_FALSE(is_spo_tableau(F("[[t2],[t1*]]", A), A));
  CHECK_FALSE(is_spo_tableau(F("[[v1],[t2]]", A), A));
  // row 2 needs letters from t2 on
  CHECK_FALSE(is_spo_tableau(F("[[t1],[t1*]]", A), A));
  CHECK(filling_str(big, A) == "[[t1,t1*,t2,v1,v3],[t2,t2*,t3,v2],[t3*,t4,v1],[v1,v2],[v2]]");
  CHECK(filling_from_json(to_json(big, A), A) == big);
}

TEST_CASE("tableau enumeration against brute force") {
  for (auto [r, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 0}, {0, 2}, {1, 2}, {2, 1}})
    for (const auto& lam : partitions_up_to(4)) {
      if (2 * r + n > 4 && lam.size() > 3) continue;
      Alphabet A{r, n};
      INFO("r=" << r << " n=" << n << " " << lam.str());
      CHECK(count_spo(lam, A) == count_brute(lam, A));
    }
  Alphabet A{1, 1};
  CHECK(count_spo(Partition{1}, A) == 3);
}

TEST_CASE("punctured tableaux and single slides") {
  Alphabet A{4, 4};
  auto J = F("[[t1*,t2,t2],[_,t3,v2],[t3,v1,v2],[v2]]", A);
  CHECK(is_punctured_spo(J, A));
  CHECK(in_nw(J, A));
  CHECK_FALSE(in_se(J, A));
  auto s1 = se_step(J, A);
  CHECK(filling_str(s1, A) == "[[t1*,t2,t2],[t3,t3,v2],[_,v1,v2],[v2]]");
  CHECK(nw_step(s1, A) == J);
  // single available neighbour to the east
  Alphabet B{1, 2};
  auto E = F("[[_,v1]]", B);
  CHECK(filling_str(se_step(E, B), B) == "[[v1,_]]");
  CHECK(hole_at_corner(F("[[v1,_]]", B)));
  CHECK(remove_corner_hole(F("[[v1,_]]", B)) == F("[[v1]]", B));
}

TEST_CASE("the worked slide sequence") {
  Alphabet A{4, 4};
  auto J = F("[[t1*,t2,t2],[_,t3,v2],[t3,v1,v2],[v2]]", A);
  std::vector<Filling> tr;
  auto out = jeu(J, A, &tr);
  REQUIRE(tr.size() == 3);
  CHECK(filling_str(tr[1], A) == "[[t1*,t2,t2],[t3,t3,v2],[v1,_,v2],[v2]]");
  CHECK(filling_str(out, A) == "[[t1*,t2,t2],[t3,t3,v2],[v1,v2,_],[v2]]");
  CHECK(hole_position(out) == std::pair<int, int>{2, 2});
  CHECK(injeu(out, A) == J);
  Alphabet B{1, 1};
  auto one = F("[[_]]", B);
  CHECK(in_nw(one, B));
  CHECK(in_se(one, B));
  CHECK(jeu(one, B) == one);
}

TEST_CASE("slides invert each other on random punctured tableaux") {
  std::mt19937 rng(5);
  int tried = 0;
  for (auto [r, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {3, 2}, {2, 3}}) {
    Alphabet A{r, n};
    auto all = punctured(A, 5);
    std::shuffle(all.begin(), all.end(), rng);
    for (std::size_t i = 0; i < all.size() && i < 60; ++i) {
      const auto& P = all[i];
      if (!in_se(P, A)) {
        auto s = se_step(P, A);
        CHECK(nw_step(s, A) == P);
        ++tried;
      }
      if (!in_nw(P, A)) {
        auto s = nw_step(P, A);
        CHECK(se_step(s, A) == P);
        ++tried;
      }
    }
  }
  CHECK(tried >= 200);
}

TEST_CASE("jeu and injeu are inverse bijections") {
  Alphabet A{2, 2};
  auto all = punctured(A, 5);
  std::set<Filling> nw_images, se_images;
  long long nw = 0, se = 0;
  for (const auto& P : all) {
    if (in_nw(P, A)) {
      ++nw;
      auto Q = jeu(P, A);
      CHECK(in_se(Q, A));
      CHECK(injeu(Q, A) == P);
      nw_images.insert(Q);
    }
    if (in_se(P, A)) {
      ++se;
      auto Q = injeu(P, A);
      CHECK(in_nw(Q, A));
      CHECK(jeu(Q, A) == P);
      se_images.insert(Q);
    }
  }
  CHECK(static_cast<long long>(nw_images.size()) == nw);
  CHECK(static_cast<long long>(se_images.size()) == se);
}

TEST_CASE("single letter insertion") {
  Alphabet A{4, 4};
  CHECK(insert_letter(A.t(1), F("[[t1*,v2],[t2]]", A), A) == F("[[t2,v2]]", A));
  CHECK(insert_letter(A.v(3), F("[[t2,v2]]", A), A) == F("[[t2,v2],[v3]]", A));
  for (int a = 0; a < A.size(); ++a) CHECK(insert_letter(a, Filling{}, A) == Filling{{a}});
}

TEST_CASE("the worked insertion and deletion") {
  Alphabet A{4, 4};
  auto w = parse_letter_word("v2 t2 t1* t1 v3 t1", A);
  auto res = insert_word(w, A);
  CHECK(filling_str(res.T, A) == "[[t1,v2],[t2,v3]]");
  CHECK(chain_str(res.chain) == "((),(1),(2),(2,1),(2),(2,1),(2,2))");
  CHECK(is_up_down(res.chain, 4, 4));
  // letters come back last first
  Filling T = res.T;
  UpDownChain c = res.chain;
  std::vector<std::string> got;
  while (c.size() > 1) {
    auto st = delete_last(T, c, A);
    got.push_back(A.token(st.letter));
    T = st.T;
    c = st.chain;
  }
  CHECK(got == std::vector<std::string>{"t1", "v3", "t1", "t1*", "t2", "v2"});
  CHECK(T.empty());
}

TEST_CASE("trivial insertions") {
  Alphabet A{1, 1};
  auto e = insert_word({}, A);
  CHECK(e.T.empty());
  CHECK(e.chain == UpDownChain{Partition{}});
  for (int a = 0; a < A.size(); ++a) {
    auto r = insert_word({a}, A);
    auto d = delete_last(r.T, r.chain, A);
    CHECK(d.letter == a);
    CHECK(d.T.empty());
    CHECK(d.chain == UpDownChain{Partition{}});
  }
  std::set<std::pair<Filling, UpDownChain>> pairs;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      auto r = insert_word({a, b}, A);
      pairs.insert({r.T, r.chain});
    }
  CHECK(pairs.size() == 9);
}

TEST_CASE("deleting the last letter undoes its insertion") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    int r = 1 + trial % 3, n = trial % 4;
    Alphabet A{r, n};
    std::uniform_int_distribution<int> letter(0, A.size() - 1), len(1, 7);
    std::vector<int> w(len(rng));
    for (int& x : w) x = letter(rng);
    auto full = insert_word(w, A);
    auto st = delete_last(full.T, full.chain, A);
    CHECK(st.letter == w.back());
    auto prefix = insert_word(std::vector<int>(w.begin(), w.end() - 1), A);
    CHECK(st.T == prefix.T);
    CHECK(st.chain == prefix.chain);
    // shapes change one box at a time
    for (std::size_t i = 1; i < full.chain.size(); ++i)
      CHECK(std::abs(full.chain[i].size() - full.chain[i - 1].size()) == 1);
  }
}

TEST_CASE("deletion rejects pairs outside the image") {
  Alphabet A{1, 1};
  CHECK_THROWS_AS(delete_last(F("[[t1*]]", A), parse_chain("((),(1),(1,1),(1))"), A), std::invalid_argument);
}

TEST_CASE("up-down tableaux") {
  CHECK(is_up_down(parse_chain("[[],[1],[2],[1]]"), 1, 1));
  CHECK_FALSE(is_up_down(parse_chain("[[],[2]]"), 1, 1));
  CHECK(count_ud(Partition{}, 1, 1, 2) == 1);
  CHECK(count_ud(Partition{1}, 1, 1, 3) == 3);
  CHECK(up_down_tableaux(1, 1, 0).size() == 1);
}

TEST_CASE("counting small cases") {
  auto c = verify_counting(1, 1, 2);
  CHECK(c.words == 9);
  CHECK(c.pairs == 9);
  CHECK(c.breakdown.at(Partition{2}) == std::pair<long long, long long>{1, 5});
  CHECK(c.breakdown.at(Partition{1, 1}) == std::pair<long long, long long>{1, 3});
  CHECK(c.breakdown.at(Partition{}) == std::pair<long long, long long>{1, 1});
  for (int r = 0; r <= 2; ++r)
    for (int n = 0; n <= 2; ++n) {
      if (r + n == 0) continue;
      CHECK(verify_counting(r, n, 0).pairs == 1);
      CHECK(verify_counting(r, n, 1).pairs == 2 * r + n);
      CHECK(count_spo(Partition{1}, Alphabet{r, n}) == 2 * r + n);
    }
}

TEST_CASE("words always come back") {
  for (auto [r, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 0}, {0, 3}}) {
    Alphabet A{r, n};
    for (int k = 0; k <= 3; ++k) {
      auto b = verify_bijection(r, n, k);
      CHECK(b.word_failures == 0);
    }
  }
}
