#include "ospo/spo_algebra.hpp"

#include <stdexcept>
#include <tuple>

namespace ospo {

SpoMatrix matrix_unit_combo(const ModuleData& M, const std::string& name,
                            const std::vector<std::tuple<int, int, Rat>>& units) {
  int N = M.dim();
  SpoMatrix x;
  x.name = name;
  x.entries.assign(N, std::vector<Rat>(N, Rat(0)));
  x.root.assign(M.r() + M.s(), 0);
  bool first = true;
  for (auto& [v, w, c] : units) {
    x.entries[v][w] += c;
    int deg = (M.degree(v) + M.degree(w)) % M.bichar().order();
    if (first) x.degree = deg;
    first = false;
  }
  if (!units.empty()) {
    auto [v, w, c] = units.front();
    auto wv = M.weight(v), ww = M.weight(w);
    for (std::size_t i = 0; i < wv.size(); ++i) x.root[i] = wv[i] - ww[i];
  }
  return x;
}

bool is_homogeneous(const SpoMatrix& x, const ModuleData& M) {
  int g = M.bichar().order();
  for (int v = 0; v < M.dim(); ++v)
    for (int w = 0; w < M.dim(); ++w)
      if (!x.entries[v][w].is_zero() && (M.degree(v) + M.degree(w)) % g != x.degree) return false;
  return true;
}

bool satisfies_spo_condition(const SpoMatrix& x, const ModuleData& M) {
  if (!is_homogeneous(x, M)) return false;
  int N = M.dim();
  for (int u = 0; u < N; ++u) {
    int sgn = M.bichar()(M.degree(u), x.degree);
    for (int v = 0; v < N; ++v) {
      // <xu, v> + beta(b, a) <u, xv>
      Rat lhs(0);
      for (int w = 0; w < N; ++w) {
        if (M.form(w, v)) lhs += x.entries[w][u] * Rat(M.form(w, v));
        if (M.form(u, w)) lhs += Rat(sgn * M.form(u, w)) * x.entries[w][v];
      }
      if (!lhs.is_zero()) return false;
    }
  }
  return true;
}

int spo_dimension(const ModuleData& M) {
  int m = M.m(), n = M.n();
  return m * (m + 1) / 2 + n * (n - 1) / 2 + m * n;
}

SpoBasis spo_basis(const ModuleData& M) {
  int r = M.r(), s = M.s();
  auto b = [&](int i, int j) { return Rat(M.beta(i, j)); };
  auto bb = [&](int i) { return Rat(M.beta(i, i)); };
  SpoBasis out;
  // unstarred representatives t_1..t_r, u_1..u_s and u_{s+1}
  std::vector<int> plain, paired;
  for (int i = 1; i <= r; ++i) plain.push_back(M.index_t(i, false));
  for (int j = 1; j <= s; ++j) plain.push_back(M.index_u(j, false));
  paired = plain;
  if (M.odd()) plain.push_back(M.index_u_odd());
  for (int v : paired)
    out.cartan.push_back(matrix_unit_combo(M, "h_" + M.token(v),
                                           {{v, v, Rat(1)}, {M.star(v), M.star(v), Rat(-1)}}));
  for (int v : plain)
    for (int w : plain) {
      if (v == w) continue;
      out.roots.push_back(matrix_unit_combo(
          M, "E(" + M.token(v) + "," + M.token(w) + ")",
          {{v, w, Rat(1)}, {M.star(w), M.star(v), -bb(w) * b(v, w)}}));
    }
  // -eps_v - eps_w and eps_v + eps_w, unordered pairs
  for (std::size_t a = 0; a < paired.size(); ++a)
    for (std::size_t c = a; c < paired.size(); ++c) {
      int v = paired[a], w = paired[c];
      if (v == w && !M.is_even_part(v)) continue;
      int vs = M.star(v), ws = M.star(w);
      Rat c1 = bb(v) * bb(w) * b(vs, w);
      Rat c2 = b(vs, w);
      if (v == w) {
        out.roots.push_back(matrix_unit_combo(M, "E(" + M.token(vs) + "," + M.token(v) + ")", {{vs, v, Rat(1)}}));
        out.roots.push_back(matrix_unit_combo(M, "E(" + M.token(v) + "," + M.token(vs) + ")", {{v, vs, Rat(1)}}));
        continue;
      }
      out.roots.push_back(matrix_unit_combo(M, "E(" + M.token(vs) + "," + M.token(w) + ")",
                                            {{vs, w, Rat(1)}, {M.star(w), v, c1}}));
      out.roots.push_back(matrix_unit_combo(M, "E(" + M.token(v) + "," + M.token(ws) + ")",
                                            {{v, ws, Rat(1)}, {w, vs, c2}}));
    }
  // simple root vectors
  for (int i = 1; i < r; ++i) {
    int ti = M.index_t(i, false), tj = M.index_t(i + 1, false);
    out.simple.push_back(matrix_unit_combo(M, "x" + std::to_string(i),
                                           {{ti, tj, Rat(1)}, {M.star(tj), M.star(ti), -b(ti, tj)}}));
  }
  if (r >= 1) {
    int tr = M.index_t(r, false);
    int first_odd = s >= 1 ? M.index_u(1, false) : M.index_u_odd();
    std::string name = "x" + std::to_string(r);
    if (first_odd < 0)  // no odd part: root 2 eps_r
      out.simple.push_back(matrix_unit_combo(M, name, {{tr, M.star(tr), Rat(1)}}));
    else
      out.simple.push_back(matrix_unit_combo(
          M, name, {{tr, first_odd, Rat(1)}, {M.star(first_odd), M.star(tr), b(tr, first_odd)}}));
  }
  for (int j = 1; j < s; ++j) {
    int uj = M.index_u(j, false), uk = M.index_u(j + 1, false);
    out.simple.push_back(matrix_unit_combo(M, "x" + std::to_string(r + j),
                                           {{uj, uk, Rat(1)}, {M.star(uk), M.star(uj), b(uj, uk)}}));
  }
  if (s >= 1) {
    std::string name = "x" + std::to_string(r + s);
    int us = M.index_u(s, false);
    if (M.odd()) {
      int u0 = M.index_u_odd();
      out.simple.push_back(matrix_unit_combo(M, name, {{us, u0, Rat(1)}, {M.star(u0), M.star(us), b(us, u0)}}));
    } else if (s >= 2) {
      int up = M.index_u(s - 1, false);
      out.simple.push_back(matrix_unit_combo(
          M, name, {{us, M.star(up), Rat(1)}, {up, M.star(us), b(M.star(us), up)}}));
    } else if (r >= 1) {
      // n = 2: the last simple root is eps_r + delta_1
      int tr = M.index_t(r, false);
      out.simple.push_back(matrix_unit_combo(
          M, name, {{tr, M.star(us), Rat(1)}, {us, M.star(tr), b(M.star(tr), us)}}));
    }
  }
  return out;
}

TensorVector act_on_tensor(const SpoMatrix& x, const TensorVector& w, const ModuleData& M) {
  int N = M.dim();
  TensorVector out(w.k());
  // column lists of x
  std::vector<std::vector<std::pair<int, Rat>>> cols(N);
  for (int v = 0; v < N; ++v)
    for (int u = 0; u < N; ++u)
      if (!x.entries[v][u].is_zero()) cols[u].emplace_back(v, x.entries[v][u]);
  for (auto& [word, c] : w.terms()) {
    int sgn = 1;
    Word nw = word;
    for (int i = 0; i < w.k(); ++i) {
      int u = word[i];
      for (auto& [v, a] : cols[u]) {
        nw[i] = v;
        out.add(nw, c * a * Rat(sgn));
      }
      nw[i] = u;
      sgn *= M.bichar()(M.degree(u), x.degree);
    }
  }
  return out;
}

}  // namespace ospo
