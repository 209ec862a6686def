#include "ospo/module.hpp"

#include <stdexcept>

namespace ospo {

Bicharacter Bicharacter::super() { return from_table({{1, 1}, {1, -1}}); }
Bicharacter Bicharacter::trivial() { return from_table({{1}}); }

Bicharacter Bicharacter::from_table(std::vector<std::vector<int>> table) {
  int g = static_cast<int>(table.size());
  if (g != 1 && g != 2) throw std::invalid_argument("only grading groups of order 1 or 2 are supported");
  for (auto& row : table)
    if (static_cast<int>(row.size()) != g) throw std::invalid_argument("bicharacter table must be square");
  auto mul = [g](int a, int b) { return (a + b) % g; };
  for (int a = 0; a < g; ++a)
    for (int b = 0; b < g; ++b) {
      if (table[a][b] != 1 && table[a][b] != -1) throw std::invalid_argument("bicharacter values must be +-1");
      if (table[a][b] * table[b][a] != 1) throw std::invalid_argument("bicharacter is not skew-symmetric");
      for (int c = 0; c < g; ++c) {
        if (table[mul(a, b)][c] != table[a][c] * table[b][c] || table[a][mul(b, c)] != table[a][b] * table[a][c])
          throw std::invalid_argument("table is not a bicharacter");
      }
    }
  Bicharacter b;
  b.table_ = std::move(table);
  return b;
}

ModuleData ModuleData::build(int r, int s, bool odd, const Bicharacter& beta) {
  if (r < 0 || s < 0) throw std::invalid_argument("r and s must be nonnegative");
  if (r == 0 && s == 0 && !odd) throw std::invalid_argument("the module would be zero (r = s = 0, n even)");
  int odd_deg = beta.order() == 2 ? 1 : 0;
  if (beta(odd_deg, odd_deg) != -1 && (s > 0 || odd))
    throw std::invalid_argument("this bicharacter has no odd degree; only r > 0, n = 0 is possible");
  ModuleData M;
  M.r_ = r;
  M.s_ = s;
  M.odd_ = odd;
  M.beta_ = beta;
  for (int i = 1; i <= r; ++i) {
    M.basis_.push_back({BasisKind::T, i, 0});
    M.basis_.push_back({BasisKind::TStar, i, 0});
  }
  for (int j = 1; j <= s; ++j) {
    M.basis_.push_back({BasisKind::U, j, odd_deg});
    M.basis_.push_back({BasisKind::UStar, j, odd_deg});
  }
  if (odd) M.basis_.push_back({BasisKind::UOdd, s + 1, odd_deg});
  int N = M.dim();
  M.star_.resize(N);
  M.F_.assign(N, std::vector<int>(N, 0));
  M.Finv_.assign(N, std::vector<int>(N, 0));
  for (int i = 0; i < 2 * (r + s); i += 2) {
    M.star_[i] = i + 1;
    M.star_[i + 1] = i;
    bool t = i < 2 * r;
    M.F_[i][i + 1] = 1;
    M.F_[i + 1][i] = t ? -1 : 1;
    M.Finv_[i][i + 1] = t ? -1 : 1;
    M.Finv_[i + 1][i] = 1;
  }
  if (odd) {
    M.star_[N - 1] = N - 1;
    M.F_[N - 1][N - 1] = 1;
    M.Finv_[N - 1][N - 1] = 1;
  }
  return M;
}

ModuleData ModuleData::from_rn(int r, int n, const Bicharacter& beta) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  return build(r, n / 2, n % 2 == 1, beta);
}

std::vector<int> ModuleData::weight(int i) const {
  std::vector<int> w(r_ + s_, 0);
  auto& b = basis_[i];
  switch (b.kind) {
    case BasisKind::T: w[b.index - 1] = 1; break;
    case BasisKind::TStar: w[b.index - 1] = -1; break;
    case BasisKind::U: w[r_ + b.index - 1] = 1; break;
    case BasisKind::UStar: w[r_ + b.index - 1] = -1; break;
    case BasisKind::UOdd: break;
  }
  return w;
}

std::string ModuleData::token(int i) const {
  auto& b = basis_[i];
  switch (b.kind) {
    case BasisKind::T: return "t" + std::to_string(b.index);
    case BasisKind::TStar: return "t" + std::to_string(b.index) + "*";
    case BasisKind::U: return "u" + std::to_string(b.index);
    case BasisKind::UStar: return "u" + std::to_string(b.index) + "*";
    case BasisKind::UOdd: return "u" + std::to_string(b.index);
  }
  return "?";
}

int ModuleData::index_of(std::string_view tok) const {
  std::string t(tok);
  bool star = !t.empty() && t.back() == '*';
  if (star) t.pop_back();
  if (t.size() < 2) throw std::invalid_argument("bad basis token '" + std::string(tok) + "'");
  char c = t[0];
  int idx;
  try {
    std::size_t used = 0;
    idx = std::stoi(t.substr(1), &used);
    if (used != t.size() - 1) throw std::invalid_argument("");
  } catch (...) {
    throw std::invalid_argument("bad basis token '" + std::string(tok) + "'");
  }
  if (c == 't' && idx >= 1 && idx <= r_) return index_t(idx, star);
  if (c == 'u' && idx >= 1 && idx <= s_) return index_u(idx, star);
  if (c == 'u' && odd_ && idx == s_ + 1 && !star) return index_u_odd();
  if (c == 'v' && idx >= 1 && idx <= n() && !star) {
    // B1 listed in order u1,u1*,...: v_j is the j-th element
    return 2 * r_ + idx - 1;
  }
  throw std::invalid_argument("basis token '" + std::string(tok) + "' not in this module");
}

std::string ModuleData::describe() const {
  return "r=" + std::to_string(r_) + " n=" + std::to_string(n()) + (beta_.is_super() ? "" : " (trivial bicharacter)");
}

}  // namespace ospo
