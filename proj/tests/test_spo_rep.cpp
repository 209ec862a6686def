#include <doctest.h>

#include <random>

#include "ospo/group_algebra.hpp"
#include "ospo/linear_algebra.hpp"
#include "ospo/maximal.hpp"
#include "ospo/psi.hpp"
#include "ospo/spo_algebra.hpp"
#include "ospo/tensor.hpp"

using namespace ospo;

namespace {

TensorVector vec(const ModuleData& M, const std::string& w, Rat c = Rat(1)) {
  return TensorVector::basis(parse_word(M, w), c);
}

// <xu, v> + beta(x, u) <u, xv> for all basis u, v
bool preserves_form(const SpoMatrix& x, const ModuleData& M) {
  int N = M.dim();
  for (int u = 0; u < N; ++u)
    for (int v = 0; v < N; ++v) {
      Rat s(0);
      for (int a = 0; a < N; ++a) {
        s += x.entries[a][u] * Rat(M.form(a, v));
        s += Rat(M.bichar()(x.degree, M.degree(u))) * Rat(M.form(u, a)) * x.entries[a][v];
      }
      if (!s.is_zero()) return false;
    }
  return true;
}

std::vector<std::pair<int, int>> small_modules() { return {{1, 0}, {0, 1}, {0, 2}, {1, 1}, {0, 3}, {1, 2}, {2, 0}, {2, 1}}; }

}  // namespace

TEST_CASE("module forms") {
  auto M = ModuleData::build(1, 0, false);
  CHECK(M.dim() == 2);
  CHECK(M.token(0) == "t1");
  CHECK(M.token(1) == "t1*");
  CHECK(M.form_matrix() == std::vector<std::vector<int>>{{0, 1}, {-1, 0}});
  auto U = ModuleData::build(0, 0, true);
  CHECK(U.dim() == 1);
  CHECK(U.form(0, 0) == 1);
  auto M2 = ModuleData::build(1, 1, false);
  CHECK(M2.dim() == 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int s = 0;
      for (int l = 0; l < 4; ++l) s += M2.form(i, l) * M2.form_inv(l, j);
      CHECK(s == (i == j ? 1 : 0));
    }
  CHECK(M2.index_of("u1*") == 3);
  CHECK_THROWS(M2.index_of("t2"));
}

TEST_CASE("the symmetry algebra basis") {
  auto M = ModuleData::build(1, 0, false);
  auto B = spo_basis(M);
  REQUIRE(B.cartan.size() == 1);
  CHECK(B.cartan[0].entries[0][0] == Rat(1));
  CHECK(B.cartan[0].entries[1][1] == Rat(-1));
  for (auto [r, n] : small_modules()) {
    auto N = ModuleData::from_rn(r, n);
    auto BB = spo_basis(N);
    INFO(N.describe());
    CHECK(static_cast<int>(BB.cartan.size() + BB.roots.size()) == spo_dimension(N));
    std::vector<TensorVector> flat;
    for (auto* part : {&BB.cartan, &BB.roots})
      for (const auto& x : *part) {
        CHECK(preserves_form(x, N));
        CHECK(satisfies_spo_condition(x, N));
        CHECK(is_homogeneous(x, N));
        TensorVector t(2);
        for (int i = 0; i < N.dim(); ++i)
          for (int j = 0; j < N.dim(); ++j)
            if (!x.entries[i][j].is_zero()) t.add({i, j}, x.entries[i][j]);
        flat.push_back(t);
      }
    CHECK(rank(flat) == spo_dimension(N));
  }
  // first simple root vector for r = 1, n = 3
  auto M3 = ModuleData::from_rn(1, 3);
  auto x1 = spo_basis(M3).simple.at(0);
  int t1 = M3.index_t(1, false), u1 = M3.index_u(1, false);
  CHECK(x1.entries[t1][u1] == Rat(1));
  CHECK(x1.entries[M3.star(u1)][M3.star(t1)] == Rat(1));
}

TEST_CASE("action on tensors") {
  auto M = ModuleData::build(1, 0, false);
  auto h = spo_basis(M).cartan[0];
  CHECK(act_on_tensor(h, vec(M, "t1 t1"), M) == vec(M, "t1 t1", Rat(2)));
  CHECK(act_on_tensor(h, vec(M, "t1 t1*"), M).is_zero());
  // odd operator passing an odd factor picks up a sign
  auto N = ModuleData::from_rn(1, 1);
  int u = N.index_u_odd();
  int odd_ops = 0;
  for (const auto& x : spo_basis(N).roots) {
    if (x.degree != 1) continue;
    ++odd_ops;
    auto xu = act_on_tensor(x, TensorVector::basis({u}), N);
    TensorVector want(2);
    for (const auto& [w, c] : xu.terms()) {
      want.add({w[0], u}, c);
      want.add({u, w[0]}, -c);
    }
    CHECK(act_on_tensor(x, TensorVector::basis({u, u}), N) == want);
  }
  CHECK(odd_ops > 0);
}

TEST_CASE("weights") {
  auto M = ModuleData::from_rn(1, 4);
  CHECK(weight_of(M, parse_word(M, "t1")) == std::vector<int>{1, 0, 0});
  CHECK(weight_of(M, parse_word(M, "t1 t1*")) == std::vector<int>{0, 0, 0});
  CHECK(weight_of(M, parse_word(M, "u1 u2")) == std::vector<int>{0, 1, 1});
  auto v = vec(M, "t1 u1") + vec(M, "u1 t1") + vec(M, "t1 t1*");
  CHECK(weight_decompose(M, v).size() == 2);
}

TEST_CASE("generator action") {
  auto M = ModuleData::build(1, 0, false);
  CHECK(psi_generator({'s', 1}, vec(M, "t1 t1"), M) == vec(M, "t1 t1", Rat(-1)));
  CHECK(psi_generator({'e', 1}, vec(M, "t1 t1*"), M) == vec(M, "t1 t1*", Rat(-1)) + vec(M, "t1* t1"));
  CHECK(psi_generator({'e', 1}, vec(M, "t1 t1"), M).is_zero());
}

TEST_CASE("diagram action") {
  for (auto [r, n] : small_modules()) {
    auto M = ModuleData::from_rn(r, n);
    INFO(M.describe());
    for (const auto& w : all_words(M.dim(), 2)) {
      auto v = TensorVector::basis(w);
      CHECK(psi_diagram(BrauerDiagram::identity(2), v, M) == v);
      CHECK(psi_diagram(gen_e(2, 1), v, M) == psi_generator({'e', 1}, v, M));
      auto once = psi_generator({'e', 1}, v, M);
      CHECK(psi_generator({'e', 1}, once, M) == once * Rat(M.eta()));
      // a single crossing swaps with a sign
      Rat sign = -Rat(M.beta(w[1], w[0]));
      CHECK(psi_diagram_weights(gen_s(2, 1), v, M) == TensorVector::basis({w[1], w[0]}, sign));
      CHECK(psi_diagram_weights(BrauerDiagram::identity(2), w, M) == v);
    }
  }
}

TEST_CASE("invariant tensors") {
  auto M = ModuleData::build(1, 0, false);
  CHECK(phi_onefactor(parse_onefactor("((1,2))"), M) == vec(M, "t1 t1*", Rat(-1)) + vec(M, "t1* t1"));
  for (auto [r, n] : small_modules()) {
    auto N = ModuleData::from_rn(r, n);
    auto B = spo_basis(N);
    for (int twok = 2; twok <= 6; twok += 2) {
      if (twok == 6 && N.dim() > 3) continue;
      for (const auto& f : all_onefactors(twok)) {
        auto phi = phi_onefactor(f, N);
        for (auto* part : {&B.cartan, &B.roots})
          for (const auto& x : *part) CHECK(act_on_tensor(x, phi, N).is_zero());
      }
    }
  }
  for (const auto& f : all_onefactors(6))
    if (crossings(f).empty()) {
      // without crossings every coefficient is a product of inverse form entries
      auto N = ModuleData::from_rn(1, 1);
      auto phi = phi_onefactor(f, N);
      for (const auto& [w, c] : phi.terms()) {
        Rat p(1);
        for (auto [a, b] : f) p *= Rat(N.form_inv(w[a - 1], w[b - 1]));
        CHECK(c == p);
      }
    }
}

TEST_CASE("Young symmetrizers") {
  auto y1 = young_symmetrizer(StandardTableau(std::vector<std::vector<int>>{{1}}), 1);
  CHECK(y1.y == GroupAlgebraElement::unit(1));
  auto y2 = young_symmetrizer(StandardTableau({{1, 2}}), 2);
  CHECK(y2.h == Rat(2));
  GroupAlgebraElement want(2);
  want.add({0, 1}, Rat(1, 2));
  want.add({1, 0}, Rat(-1, 2));
  CHECK(y2.y == want);
  // idempotent, and orthogonal when the first tableau is larger
  for (const auto& lam : partitions_up_to(4)) {
    std::vector<int> labels(lam.size());
    for (int i = 0; i < lam.size(); ++i) labels[i] = i + 1;
    auto ts = standard_tableaux(lam, labels);
    for (const auto& a : ts) {
      auto ya = young_symmetrizer(a, lam.size()).y;
      CHECK(ya * ya == ya);
      for (const auto& b : ts)
        if (tableau_compare(a, b) == std::strong_ordering::greater)
          CHECK((ya * young_symmetrizer(b, lam.size()).y).is_zero());
    }
  }
}

TEST_CASE("group algebra action") {
  auto M = ModuleData::build(1, 0, false);
  auto v = vec(M, "t1 t1");
  CHECK(act_group_algebra(GroupAlgebraElement::unit(2), v, M) == v);
  GroupAlgebraElement sw(2);
  sw.add({1, 0}, Rat(1));
  CHECK(act_group_algebra(sw, v, M) == v * Rat(-1));
  auto N = ModuleData::from_rn(0, 2);
  auto col = young_symmetrizer(StandardTableau({{1}, {2}}), 2).y;
  auto uu = vec(N, "u1 u1");
  CHECK(act_group_algebra(col, uu, N) == uu);
}

TEST_CASE("contractions") {
  CHECK(contraction_chain({{1, 2}}, 2) == gen_e(2, 1));
  CHECK(contraction_chain({{1, 3}, {2, 4}}, 4) == multiply(contraction(4, 1, 3), contraction(4, 2, 4)).diagram);
  CHECK(contraction_patterns(4, 2).size() == 3);
  CHECK(contraction_patterns(3, 1).size() == 3);
  CHECK(free_slots({{1, 3}}, 4) == std::vector<int>{2, 4});
}

TEST_CASE("maximal vectors") {
  auto M = ModuleData::build(1, 0, false);
  auto v = maximal_vector({}, StandardTableau(std::vector<std::vector<int>>{{1}}), false, M, 1);
  CHECK(v == vec(M, "t1"));
  CHECK(is_maximal(v, M));
  CHECK(expected_weight(Partition{1}, false, M) == std::vector<int>{1});
  auto e = maximal_vector({{1, 2}}, StandardTableau(), false, M, 2);
  CHECK(is_maximal(e, M));
  CHECK(weight_decompose(M, e).begin()->first == std::vector<int>{0});
  CHECK_FALSE(is_maximal(TensorVector(1), M));
  auto M2 = ModuleData::from_rn(2, 0);
  CHECK_FALSE(is_maximal(vec(M2, "t1*"), M2));
  CHECK(is_maximal(vec(M2, "t1"), M2));
  // (1,1) with r >= 1, s >= 1 puts a u in the second row
  auto M3 = ModuleData::from_rn(1, 3);
  auto w = maximal_vector({}, StandardTableau({{1}, {2}}), false, M3, 2);
  CHECK(is_maximal(w, M3));
  CHECK(weight_decompose(M3, w).begin()->first == expected_weight(Partition{1, 1}, false, M3));
}

TEST_CASE("maximal families have full rank") {
  auto M = ModuleData::from_rn(1, 0);
  auto f1 = maximal_family(1, M);
  CHECK(f1.count == 1);
  CHECK(f1.rank == 1);
  // k = 2, r + s >= 2: hook tableaux of size 2 plus one contraction
  auto N = ModuleData::from_rn(1, 2);
  auto f2 = maximal_family(2, N);
  long long want = 1;
  for (const auto& lam : partitions_of(2))
    if (lam.is_hook(1, 1)) want += count_standard_tableaux(lam);
  CHECK(f2.count == want);
  CHECK(f2.rank == f2.count);
  auto P = ModuleData::from_rn(2, 3);
  auto f3 = maximal_family(3, P);
  CHECK(f3.rank == f3.count);
}
