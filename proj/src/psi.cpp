#include "ospo/psi.hpp"

#include <functional>
#include <stdexcept>

namespace ospo {

static void check_size(int k, int len) {
  if (k != len) throw std::invalid_argument("diagram size does not match tensor length");
}

TensorVector psi_generator(const Generator& g, const TensorVector& w, const ModuleData& M) {
  int k = w.k(), i = g.index - 1;
  if (i < 0 || i + 1 >= k) throw std::out_of_range("generator slot out of range");
  TensorVector out(k);
  int N = M.dim();
  for (auto& [word, c] : w.terms()) {
    int a = word[i], b = word[i + 1];
    Word nw = word;
    if (g.kind == 's') {
      nw[i] = b;
      nw[i + 1] = a;
      out.add(nw, c * Rat(-M.beta(b, a)));
    } else {
      int f = M.form(a, b);
      if (!f) continue;
      for (int l1 = 0; l1 < N; ++l1) {
        int l2 = M.form_partner(l1);
        int fi = M.form_inv(l1, l2);
        if (!fi) continue;
        nw[i] = l1;
        nw[i + 1] = l2;
        out.add(nw, c * Rat(f * fi));
      }
    }
  }
  return out;
}

TensorVector psi_diagram(const BrauerDiagram& d, const TensorVector& w, const ModuleData& M) {
  check_size(d.k(), w.k());
  TensorVector cur = w;
  for (auto& g : factorize(d)) cur = psi_generator(g, cur, M);
  return cur;
}

std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> crossings(const OneFactor& f) {
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> out;
  for (auto& e1 : f)
    for (auto& e2 : f)
      if (e1.first < e2.first && e2.first < e1.second && e1.second < e2.second) out.emplace_back(e1, e2);
  return out;
}

// labels along the unfolded row: positions 1..k bottom, k+1..2k top reversed
static std::vector<int> unfolded_labels(const Word& a, const Word& b) {
  int k = static_cast<int>(a.size());
  std::vector<int> L(2 * k + 1, -1);
  for (int j = 0; j < k; ++j) L[j + 1] = b[j];
  for (int i = 0; i < k; ++i) L[2 * k - i] = a[i];
  return L;
}

static Rat crossing_factor(const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>& cr,
                           const std::vector<int>& L, const ModuleData& M) {
  int sign = 1;
  for (auto& [e1, e2] : cr) sign *= -M.beta(L[e1.second], L[e2.second]);
  return Rat(sign);
}

Rat diagram_weight(const BrauerDiagram& d, const Word& a, const Word& b, const ModuleData& M) {
  int k = d.k();
  Rat w(1);
  for (int v = 0; v < 2 * k; ++v) {
    int u = d.partner(v);
    if (u < v) continue;
    if (u < k) {
      w *= Rat(M.form(a[v], a[u]));  // top edge, v left of u
    } else if (v >= k) {
      w *= Rat(M.form_inv(b[v - k], b[u - k]));
    } else if (a[v] != b[u - k]) {
      return Rat(0);
    }
    if (w.is_zero()) return w;
  }
  auto L = unfolded_labels(a, b);
  return w * crossing_factor(crossings(unfold(d)), L, M);
}

TensorVector psi_diagram_weights(const BrauerDiagram& d, const Word& a, const ModuleData& M) {
  int k = d.k();
  check_size(k, static_cast<int>(a.size()));
  TensorVector out(k);
  // top-edge weights first; they do not depend on b
  Rat top(1);
  std::vector<std::pair<int, int>> bottom;
  Word b(k, -1);
  for (int v = 0; v < 2 * k; ++v) {
    int u = d.partner(v);
    if (u < v) continue;
    if (u < k)
      top *= Rat(M.form(a[v], a[u]));
    else if (v >= k)
      bottom.emplace_back(v - k, u - k);
    else
      b[u - k] = a[v];
  }
  if (top.is_zero()) return out;
  auto cr = crossings(unfold(d));
  int N = M.dim();
  std::function<void(std::size_t, Rat)> rec = [&](std::size_t idx, Rat acc) {
    if (idx == bottom.size()) {
      out.add(b, acc * crossing_factor(cr, unfolded_labels(a, b), M));
      return;
    }
    auto [p, q] = bottom[idx];
    for (int l = 0; l < N; ++l) {
      int l2 = M.form_partner(l);
      int fi = M.form_inv(l, l2);
      if (!fi) continue;
      b[p] = l;
      b[q] = l2;
      rec(idx + 1, acc * Rat(fi));
    }
  };
  rec(0, top);
  return out;
}

TensorVector psi_diagram_weights(const BrauerDiagram& d, const TensorVector& w, const ModuleData& M) {
  check_size(d.k(), w.k());
  TensorVector out(w.k());
  for (auto& [a, c] : w.terms()) out.add_scaled(psi_diagram_weights(d, a, M), c);
  return out;
}

TensorVector phi_onefactor(const OneFactor& f, const ModuleData& M) {
  int twok = 2 * static_cast<int>(f.size());
  TensorVector out(twok);
  auto cr = crossings(f);
  int N = M.dim();
  std::vector<int> L(twok + 1, -1);
  std::function<void(std::size_t, Rat)> rec = [&](std::size_t idx, Rat acc) {
    if (idx == f.size()) {
      Word w(L.begin() + 1, L.end());
      out.add(w, acc * crossing_factor(cr, L, M));
      return;
    }
    auto [l, r] = f[idx];
    for (int b = 0; b < N; ++b) {
      int b2 = M.form_partner(b);
      int fi = M.form_inv(b, b2);
      if (!fi) continue;
      L[l] = b;
      L[r] = b2;
      rec(idx + 1, acc * Rat(fi));
    }
  };
  rec(0, Rat(1));
  return out;
}

}  // namespace ospo
