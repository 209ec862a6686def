#include "ospo/maximal.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "ospo/linear_algebra.hpp"
#include "ospo/psi.hpp"

namespace ospo {

BrauerDiagram contraction_chain(const ContractionPattern& pq, int k) {
  std::vector<int> used(k + 1, 0);
  BrauerDiagram d = BrauerDiagram::identity(k);
  for (auto [p, q] : pq) {
    if (p < 1 || q < 1 || p > k || q > k || p == q || used[p]++ || used[q]++)
      throw std::invalid_argument("contraction pairs overlap or are out of range");
    auto prod = multiply(d, contraction(k, p, q));
    d = prod.diagram;
  }
  return d;
}

std::vector<ContractionPattern> contraction_patterns(int k, int j) {
  std::vector<ContractionPattern> out;
  std::vector<int> used(k + 1, 0);
  ContractionPattern cur;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cur.size()) == j) {
      out.push_back(cur);
      return;
    }
    for (int p = from; p <= k; ++p) {
      if (used[p]) continue;
      used[p] = 1;
      for (int q = p + 1; q <= k; ++q) {
        if (used[q]) continue;
        used[q] = 1;
        cur.emplace_back(p, q);
        rec(p + 1);
        cur.pop_back();
        used[q] = 0;
      }
      used[p] = 0;
    }
  };
  rec(1);
  return out;
}

std::vector<int> free_slots(const ContractionPattern& pq, int k) {
  std::vector<int> used(k + 1, 0), out;
  for (auto [p, q] : pq) used[p] = used[q] = 1;
  for (int i = 1; i <= k; ++i)
    if (!used[i]) out.push_back(i);
  return out;
}

bool circ_applies(const Partition& lambda, const ModuleData& M) {
  return !M.odd() && M.s() >= 1 && lambda[M.r()] == M.s();
}

Word maximal_seed(const ContractionPattern& pq, const StandardTableau& T, bool circ, const ModuleData& M, int k) {
  int r = M.r(), s = M.s();
  Partition lambda = T.shape();
  if (!lambda.is_hook(r, s)) throw std::invalid_argument("tableau shape is not an (r,s)-hook");
  auto slots = free_slots(pq, k);
  auto labels = T.reading_word();
  std::sort(labels.begin(), labels.end());
  if (labels != slots) throw std::invalid_argument("tableau entries must be the uncontracted slots");
  if (circ && !circ_applies(lambda, M)) throw std::invalid_argument("the circled variant needs n = 2s and l(lambda2) = s");
  Word w(k, -1);
  // with no symplectic part the contracted slots carry u1, u1*
  int first = r >= 1 ? M.index_t(1, false) : (s >= 1 ? M.index_u(1, false) : M.index_u_odd());
  for (auto [p, q] : pq) {
    w[p - 1] = first;
    w[q - 1] = M.star(first);
  }
  auto [T1, T2] = split_subtableaux(T, r, s);
  for (std::size_t i = 0; i < T1.rows().size(); ++i)
    for (int x : T1.rows()[i]) w[x - 1] = M.index_t(static_cast<int>(i) + 1, false);
  for (std::size_t i = 0; i < T2.rows().size(); ++i) {
    int j = static_cast<int>(i) + 1;
    for (int x : T2.rows()[i]) w[x - 1] = M.index_u(j, circ && j == s);
  }
  return w;
}

TensorVector maximal_vector(const ContractionPattern& pq, const StandardTableau& T, bool circ,
                            const ModuleData& M, int k) {
  Word w = maximal_seed(pq, T, circ, M, k);
  TensorVector v = psi_diagram_weights(contraction_chain(pq, k), TensorVector::basis(w), M);
  if (T.size() == 0) return v;
  return act_group_algebra(young_symmetrizer(T, k).y, v, M);
}

std::vector<int> expected_weight(const Partition& lambda, bool circ, const ModuleData& M) {
  int r = M.r(), s = M.s();
  std::vector<int> wt(r + s, 0);
  for (int i = 0; i < r; ++i) wt[i] = lambda[i];
  Partition c = lambda.conjugate();
  for (int j = 0; j < s; ++j) wt[r + j] = std::max(0, c[j] - r);
  if (circ) wt[r + s - 1] = -wt[r + s - 1];
  return wt;
}

bool is_maximal(const TensorVector& v, const ModuleData& M, const SpoBasis& basis) {
  if (v.is_zero()) return false;
  if (weight_decompose(M, v).size() != 1) return false;
  for (auto& x : basis.simple)
    if (!act_on_tensor(x, v, M).is_zero()) return false;
  return true;
}

bool is_maximal(const TensorVector& v, const ModuleData& M) { return is_maximal(v, M, spo_basis(M)); }

MaximalFamily maximal_family(int k, const ModuleData& M) {
  MaximalFamily fam;
  std::vector<TensorVector> vecs;
  for (int j = 0; 2 * j <= k; ++j)
    for (auto& pq : contraction_patterns(k, j)) {
      auto slots = free_slots(pq, k);
      std::vector<StandardTableau> tabs;
      if (slots.empty())
        tabs.emplace_back();
      else
        tabs = hook_standard_tableaux(M.r(), M.s(), slots);
      for (auto& T : tabs) {
        auto v = maximal_vector(pq, T, false, M, k);
        fam.entries.push_back({pq, T, false, v});
        vecs.push_back(v);
      }
    }
  fam.count = static_cast<int>(vecs.size());
  fam.rank = rank(vecs);
  return fam;
}

}  // namespace ospo
