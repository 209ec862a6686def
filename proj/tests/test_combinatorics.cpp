#include <doctest.h>

#include <functional>
#include <map>

#include "ospo/partition.hpp"
#include "ospo/series.hpp"
#include "ospo/symmetric_group.hpp"
#include "ospo/tableau.hpp"

using namespace ospo;

namespace {

// integer polynomials in N variables, keyed by exponent vector
using IPoly = std::map<std::vector<int>, long long>;

IPoly mul(const IPoly& a, const IPoly& b) {
  IPoly out;
  for (auto& [ea, ca] : a)
    for (auto& [eb, cb] : b) {
      auto e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out[e] += ca * cb;
    }
  std::erase_if(out, [](auto& kv) { return kv.second == 0; });
  return out;
}

// Schur polynomial by brute-force semistandard fillings
IPoly schur_ssyt(const Partition& lam, int N) {
  IPoly out;
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < lam.length(); ++i)
    for (int j = 0; j < lam[i]; ++j) cells.emplace_back(i, j);
  std::map<std::pair<int, int>, int> fill;
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == cells.size()) {
      std::vector<int> e(N, 0);
      for (auto& [cell, v] : fill) e[v]++;
      out[e]++;
      return;
    }
    auto [i, j] = cells[c];
    for (int v = 0; v < N; ++v) {
      if (j > 0 && fill[{i, j - 1}] > v) continue;
      if (i > 0 && fill[{i - 1, j}] >= v) continue;
      fill[{i, j}] = v;
      rec(c + 1);
    }
    fill.erase({i, j});
  };
  rec(0);
  return out;
}

IPoly vandermonde(int N) {
  IPoly a;
  a[std::vector<int>(N, 0)] = 1;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      IPoly f;
      std::vector<int> ei(N, 0), ej(N, 0);
      ei[i] = 1;
      ej[j] = 1;
      f[ei] = 1;
      f[ej] = -1;
      a = mul(a, f);
    }
  return a;
}

// coefficient of s_lambda in a symmetric polynomial f in N variables
long long schur_coeff(const IPoly& f, const Partition& lam, int N) {
  auto g = mul(f, vandermonde(N));
  std::vector<int> e(N);
  for (int i = 0; i < N; ++i) e[i] = lam[i] + N - 1 - i;
  auto it = g.find(e);
  return it == g.end() ? 0 : it->second;
}

IPoly power_sum(int l, int N) {
  IPoly p;
  for (int i = 0; i < N; ++i) {
    std::vector<int> e(N, 0);
    e[i] = l;
    p[e] += 1;
  }
  return p;
}

long long count_tableaux_brute(const Partition& shape) {
  return static_cast<long long>(standard_tableaux(shape, [&] {
                                  std::vector<int> l(shape.size());
                                  for (int i = 0; i < shape.size(); ++i) l[i] = i + 1;
                                  return l;
                                }())
                                    .size());
}

}  // namespace

TEST_CASE("partition basics") {
  CHECK(Partition{}.conjugate() == Partition{});
  CHECK(Partition{4, 2, 2, 1, 1}.conjugate() == Partition{5, 3, 1, 1});
  CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
  CHECK(Partition{4, 2, 2, 1, 1}.is_hook(2, 2));
  CHECK(Partition{}.is_hook(0, 0));
  CHECK_FALSE(Partition{2, 2}.is_hook(0, 1));
  CHECK_THROWS(Partition({1, 2}));
  CHECK(Partition({3, 1, 0}).length() == 2);
  for (const auto& p : partitions_up_to(8)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("partition counts") {
  std::vector<std::size_t> want = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) CHECK(partitions_of(n).size() == want[n]);
}

TEST_CASE("frobenius coordinates") {
  CHECK(frobenius(Partition{1}) == Frobenius{{0, 0}});
  CHECK(frobenius(Partition{2, 2}) == Frobenius{{1, 1}, {0, 0}});
  CHECK(from_frobenius({{2, 1}}) == Partition{3, 1});
  for (const auto& p : partitions_up_to(7)) CHECK(from_frobenius(frobenius(p)) == p);
}

TEST_CASE("families by frobenius shape") {
  CHECK(enumerate_pi(2) == std::vector<Partition>{Partition{}, Partition{1, 1}});
  auto ev = enumerate_even(4);
  std::sort(ev.begin(), ev.end());
  std::vector<Partition> want = {Partition{}, Partition{2}, Partition{2, 2}, Partition{4}};
  std::sort(want.begin(), want.end());
  CHECK(ev == want);
  CHECK(enumerate_rho(1) == std::vector<Partition>{Partition{}});
  for (const auto& p : enumerate_rho(8))
    for (auto [a, b] : frobenius(p)) CHECK(a == b + 1);
  for (const auto& p : enumerate_pi(8))
    for (auto [a, b] : frobenius(p)) CHECK(a + 1 == b);
}

TEST_CASE("standard tableaux") {
  CHECK(standard_tableaux(Partition{1}, {5}).size() == 1);
  CHECK(standard_tableaux(Partition{2, 1}, {1, 2, 3}).size() == 2);
  for (const auto& p : partitions_up_to(6)) CHECK(count_standard_tableaux(p) == count_tableaux_brute(p));
  // hook filter: shape (2,2) has second-row part 2 > s = 1
  auto hs = hook_standard_tableaux(1, 1, {1, 2, 3, 4});
  for (const auto& T : hs) CHECK(T.shape().is_hook(1, 1));
  long long total = 0;
  for (const auto& p : partitions_of(4))
    if (p.is_hook(1, 1)) total += count_standard_tableaux(p);
  CHECK(static_cast<long long>(hs.size()) == total);
}

TEST_CASE("tableau order") {
  StandardTableau a({{1, 2}, {3}}), b({{1, 3}, {2}});
  CHECK(tableau_compare(a, a) == std::strong_ordering::equal);
  CHECK(tableau_compare(a, b) == std::strong_ordering::less);
  for (const auto& p : partitions_up_to(4)) {
    std::vector<int> labels(p.size());
    for (int i = 0; i < p.size(); ++i) labels[i] = i + 1;
    auto all = standard_tableaux(p, labels);
    StandardTableau least = all.front();
    for (const auto& T : all)
      if (tableau_compare(T, least) == std::strong_ordering::less) least = T;
    // row reading minimal filling: labels in order row by row
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int i = 0; i < p.length(); ++i) {
      rows.emplace_back();
      for (int j = 0; j < p[i]; ++j) rows.back().push_back(next++);
    }
    CHECK(least == StandardTableau(rows));
  }
}

TEST_CASE("splitting into the two subtableaux") {
  StandardTableau t({{1, 2, 3, 4}, {5, 6}, {7, 8}, {9}, {10}});
  auto [t1, t2] = split_subtableaux(t, 2, 3);
  CHECK(t1.shape() == Partition{4, 2});
  CHECK(t2.shape() == Partition{3, 1});
  auto [u1, u2] = split_subtableaux(StandardTableau({{1, 2}}), 1, 0);
  CHECK(u2.size() == 0);
  auto [v1, v2] = split_subtableaux(StandardTableau({{1}, {2}}), 1, 1);
  CHECK(v1.shape() == Partition{1});
  CHECK(v2.shape() == Partition{1});
}

TEST_CASE("permutations") {
  Perm p = {1, 2, 0};
  CHECK(compose(p, inverse(p)) == identity_perm(3));
  CHECK(perm_sign(p) == 1);
  CHECK(perm_sign({1, 0, 2}) == -1);
  CHECK(cycle_type(p) == Partition{3});
  CHECK(all_perms(4).size() == 24);
}

TEST_CASE("z_mu") {
  CHECK(z_mu(Partition{1, 1, 1}) == 6);
  CHECK(z_mu(Partition{2, 1}) == 2);
  CHECK(z_mu(Partition{3}) == 3);
  // class sizes add up to k!
  for (int k = 1; k <= 6; ++k) {
    long long s = 0;
    for (const auto& mu : partitions_of(k)) s += factorial(k) / z_mu(mu);
    CHECK(s == factorial(k));
  }
}

TEST_CASE("symmetric group characters against the power-sum expansion") {
  CHECK(sym_character(Partition{3}, Partition{2, 1}) == 1);
  CHECK(sym_character(Partition{2, 1}, Partition{2, 1}) == 0);
  CHECK(sym_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  for (int k = 1; k <= 5; ++k)
    for (const auto& mu : partitions_of(k)) {
      IPoly p;
      p[std::vector<int>(k, 0)] = 1;
      for (int part : mu.parts()) p = mul(p, power_sum(part, k));
      for (const auto& lam : partitions_of(k)) CHECK(sym_character(lam, mu) == schur_coeff(p, lam, k));
    }
}

TEST_CASE("Littlewood-Richardson coefficients against Schur products") {
  CHECK(lr_coefficient(Partition{}, Partition{2, 1}, Partition{2, 1}) == 1);
  CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{2}) == 1);
  CHECK(lr_coefficient(Partition{1}, Partition{1, 1}, Partition{2, 1}) == 1);
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b + a <= 5; ++b)
      for (const auto& mu : partitions_of(a))
        for (const auto& nu : partitions_of(b)) {
          int N = a + b;
          auto prod = mul(schur_ssyt(mu, N), schur_ssyt(nu, N));
          for (const auto& lam : partitions_of(N))
            CHECK(lr_coefficient(mu, nu, lam) == schur_coeff(prod, lam, N));
        }
}

TEST_CASE("schur coefficient extraction on series") {
  auto none = LaurentPoly::make_vars({});
  // s_(1)(y1,y2) * 3
  TruncSeries f(2, 2, none);
  f.add({1, 0}, LaurentPoly(3));
  f.add({0, 1}, LaurentPoly(3));
  CHECK(schur_coefficient(f, {1}) == LaurentPoly(3));
  CHECK(schur_coefficient(TruncSeries::one(2, 2, none), {1}).is_zero());
}

TEST_CASE("strips") {
  auto hs = horizontal_strips_above(Partition{1}, Partition{2, 2});
  for (const auto& p : hs) CHECK(p.contains(Partition{1}));
  CHECK(std::find(hs.begin(), hs.end(), Partition{2, 1}) != hs.end());
  CHECK(std::find(hs.begin(), hs.end(), Partition{2, 2}) == hs.end());  // two boxes in column 2
  auto vs = vertical_strips_above(Partition{}, Partition{2, 2});
  CHECK(std::find(vs.begin(), vs.end(), Partition{1, 1}) != vs.end());
  CHECK(std::find(vs.begin(), vs.end(), Partition{2}) == vs.end());
}
