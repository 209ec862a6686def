#include <doctest.h>

#include <cstdlib>
#include <functional>

#include "ospo/characters.hpp"
#include "ospo/psi.hpp"
#include "ospo/spo_tableau.hpp"

using namespace ospo;

namespace {

// sum over fillings: rows weak, columns weak, symplectic letters strict in
// columns, orthogonal letters strict in rows
LaurentPoly hook_schur_brute(const Partition& lam, const ModuleData& M, const VariableMap& V) {
  LaurentPoly out = V.zero();
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < lam.length(); ++i)
    for (int j = 0; j < lam[i]; ++j) cells.emplace_back(i, j);
  std::vector<std::vector<int>> fill(lam.length());
  for (int i = 0; i < lam.length(); ++i) fill[i].assign(lam[i], -1);
  std::function<void(std::size_t, LaurentPoly)> rec = [&](std::size_t c, LaurentPoly w) {
    if (c == cells.size()) {
      out += w;
      return;
    }
    auto [i, j] = cells[c];
    for (int x = 0; x < M.dim(); ++x) {
      bool even = M.is_even_part(x);
      if (j > 0) {
        int l = fill[i][j - 1];
        if (l > x || (l == x && !even)) continue;
      }
      if (i > 0) {
        int a = fill[i - 1][j];
        if (a > x || (a == x && even)) continue;
      }
      fill[i][j] = x;
      rec(c + 1, w * V.z[x]);
    }
    fill[i][j] = -1;
  };
  rec(0, V.one());
  return out;
}

// the same trace computed through the generator action
LaurentPoly trace_brute(const BrauerDiagram& d, const ModuleData& M, const VariableMap& V) {
  LaurentPoly out = V.zero();
  for (const auto& w : all_words(M.dim(), d.k())) {
    Rat c = psi_diagram(d, TensorVector::basis(w), M).coefficient(w);
    if (c.is_zero()) continue;
    LaurentPoly m = V.one();
    for (int x : w) m *= V.z[x];
    out += m * c;
  }
  return out;
}

LaurentPoly P(const std::string& s, const VariableMap& V) { return LaurentPoly::parse(s, V.vars); }

}  // namespace

TEST_CASE("variable map") {
  auto M = ModuleData::from_rn(1, 3);
  auto V = VariableMap::of(M);
  CHECK(*V.vars == VarNames{"z_t1", "z_u1"});
  CHECK(V.z[M.index_t(1, true)] == P("z_t1^-1", V));
  CHECK(V.z[M.index_u_odd()] == V.one());
  CHECK(V.even.size() == 2);
  CHECK(V.odd.size() == 3);
}

TEST_CASE("schur polynomials as series") {
  auto vars = LaurentPoly::make_vars({});
  auto s1 = schur_series(Partition{1}, 2, 3, vars);
  CHECK(s1.coefficient({1, 0}) == LaurentPoly(1));
  CHECK(s1.coefficient({0, 1}) == LaurentPoly(1));
  CHECK(s1.coefficient({1, 1}).is_zero());
  auto s2 = schur_series(Partition{2}, 2, 3, vars);
  for (auto e : std::vector<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}}) CHECK(s2.coefficient(e) == LaurentPoly(1));
  auto V = VariableMap::of(ModuleData::from_rn(1, 0));
  CHECK(skew_schur(Partition{2, 1}, Partition{2, 1}, {V.z[0]}, V.zero()) == V.one());
  CHECK_THROWS(skew_schur(Partition{1}, Partition{2}, {V.z[0]}, V.zero()));
}

TEST_CASE("hook Schur functions against brute-force fillings") {
  for (auto [r, n] : std::vector<std::pair<int, int>>{{1, 0}, {0, 2}, {1, 1}, {1, 2}, {0, 3}, {2, 1}}) {
    auto M = ModuleData::from_rn(r, n);
    auto V = VariableMap::of(M);
    for (const auto& lam : partitions_up_to(3)) {
      INFO(M.describe() << " " << lam.str());
      CHECK(hook_schur(lam, V) == hook_schur_brute(lam, M, V));
    }
  }
  auto M = ModuleData::from_rn(1, 0);
  auto V = VariableMap::of(M);
  CHECK(hook_schur(Partition{1}, V) == P("z_t1 + z_t1^-1", V));
}

TEST_CASE("power sums") {
  auto M = ModuleData::from_rn(1, 0);
  auto V = VariableMap::of(M);
  CHECK(p_bar(Partition{1}, V) == P("z_t1 + z_t1^-1", V));
  CHECK(p_bar(Partition{2}, V) == P("-z_t1^2 - z_t1^-2", V));
  auto U = VariableMap::of(ModuleData::from_rn(0, 1));
  CHECK(p_bar(Partition{1}, U) == U.one());
}

TEST_CASE("symplectic Schur functions") {
  auto V = VariableMap::of(ModuleData::from_rn(1, 0));
  CHECK(sp_schur(Partition{1}, V) == P("z_t1 + z_t1^-1", V));
  CHECK(sp_schur(Partition{1, 1}, V).is_zero());
  CHECK(sp_schur(Partition{}, V) == V.one());
  // two symplectic pairs: the (1,1) character is the 5-dim one minus the trivial
  auto W = VariableMap::of(ModuleData::from_rn(2, 0));
  CHECK(sp_schur(Partition{1, 1}, W).at_one() == Rat(5));
  CHECK(sp_schur(Partition{2}, W).at_one() == Rat(10));
}

TEST_CASE("orthogonal generating coefficients") {
  CharacterEngine E1(ModuleData::from_rn(0, 1));
  CHECK(E1.sb(Partition{}) == E1.vars().one());
  CHECK(E1.sb(Partition{1}) == E1.vars().one());
  CharacterEngine E3(ModuleData::from_rn(0, 3));
  CHECK(E3.sb(Partition{1}) == P("z_u1 + 1 + z_u1^-1", E3.vars()));
}

TEST_CASE("sc basics") {
  auto M = ModuleData::from_rn(1, 1);
  CharacterEngine E(M);
  for (ScMethod m : all_sc_methods()) CHECK(E.sc(Partition{}, m) == E.vars().one());
  CHECK(E.sc(Partition{1, 1}, ScMethod::tableaux_51) == P("z_t1 + 1 + z_t1^-1", E.vars()));
  CHECK(E.sc(Partition{1, 1}, ScMethod::sp_skew_h) == P("z_t1 + 1 + z_t1^-1", E.vars()));
  CHECK(E.sc(Partition{1}, ScMethod::LR_a) == hook_schur(Partition{1}, E.vars()));
  CHECK(parse_method("tableaux") == ScMethod::tableaux_51);
  CHECK(parse_method("e") == ScMethod::hdet_e);
  CHECK_FALSE(parse_method("zz").has_value());
}

TEST_CASE("the non-tableau methods agree on small modules") {
  for (auto [r, n] : std::vector<std::pair<int, int>>{{1, 1}, {0, 2}, {1, 0}}) {
    CharacterEngine E(ModuleData::from_rn(r, n));
    for (const auto& lam : partitions_up_to(3)) {
      auto ref = E.sc(lam, ScMethod::LR_a);
      for (ScMethod m : all_sc_methods()) {
        if (m == ScMethod::tableaux_51) continue;
        INFO("r=" << r << " n=" << n << " " << lam.str() << " " << method_name(m));
        CHECK(E.sc(lam, m) == ref);
      }
    }
  }
}

TEST_CASE("specializations") {
  // no orthogonal part: sp when the length fits
  CharacterEngine E(ModuleData::from_rn(2, 0));
  for (const auto& lam : partitions_up_to(4))
    if (lam.length() <= 2) CHECK(E.sc(lam, ScMethod::LR_a) == sp_schur(lam, E.vars()));
  // no symplectic part: the orthogonal coefficient of the conjugate
  CharacterEngine F(ModuleData::from_rn(0, 3));
  for (const auto& lam : partitions_up_to(3)) CHECK(F.sc(lam, ScMethod::LR_a) == F.sb(lam.conjugate()));
}

TEST_CASE("inverting one variable leaves sc unchanged") {
  CharacterEngine E(ModuleData::from_rn(1, 2));
  for (const auto& lam : partitions_up_to(3)) {
    auto p = E.sc(lam, ScMethod::LR_a);
    for (int i = 0; i < static_cast<int>(E.vars().vars->size()); ++i) CHECK(p.invert_variable(i) == p);
  }
}

TEST_CASE("weighted traces") {
  for (auto [r, n] : std::vector<std::pair<int, int>>{{1, 0}, {0, 2}, {1, 1}, {1, 2}}) {
    auto M = ModuleData::from_rn(r, n);
    CharacterEngine E(M);
    const auto& V = E.vars();
    CHECK(E.weighted_trace(gen_e(2, 1)) == LaurentPoly(V.vars, Rat(M.n() - M.m())));
    for (int l = 1; l <= 3; ++l) {
      LaurentPoly want = V.zero();
      for (int b : V.even) want += V.z[b].pow(l) * Rat(l % 2 ? 1 : -1);
      for (int b : V.odd) want += V.z[b].pow(l);
      CHECK(E.weighted_trace(gamma(l)) == want);
    }
    for (int k = 1; k <= 3; ++k) CHECK(E.weighted_trace(BrauerDiagram::identity(k)) == p_bar(Partition{1}, V).pow(k));
    for (int k = 1; k <= 3; ++k)
      for (const auto& d : all_diagrams(k)) CHECK(E.weighted_trace(d) == trace_brute(d, M, V));
  }
}

TEST_CASE("truncation degree") {
  unsetenv("OSPO_TRUNC_DEGREE");
  CHECK(default_trunc_degree(Partition{2, 1}) == 3);
  setenv("OSPO_TRUNC_DEGREE", "7", 1);
  CHECK(default_trunc_degree(Partition{2, 1}) == 7);
  setenv("OSPO_TRUNC_DEGREE", "1", 1);
  CHECK(default_trunc_degree(Partition{2, 1}) == 3);
  unsetenv("OSPO_TRUNC_DEGREE");
}
