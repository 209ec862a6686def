#include "ospo/characters.hpp"

#include <cstdlib>
#include <functional>
#include <stdexcept>

#include "ospo/poly_matrix.hpp"
#include "ospo/psi.hpp"
#include "ospo/spo_tableau.hpp"
#include "ospo/symmetric_group.hpp"
#include "ospo/tensor.hpp"

namespace ospo {

VariableMap VariableMap::of(const ModuleData& M) {
  VariableMap V;
  VarNames names;
  for (int i = 1; i <= M.r(); ++i) names.push_back("z_t" + std::to_string(i));
  for (int j = 1; j <= M.s(); ++j) names.push_back("z_u" + std::to_string(j));
  V.vars = LaurentPoly::make_vars(names);
  for (int b = 0; b < M.dim(); ++b) {
    const auto& el = M.element(b);
    switch (el.kind) {
      case BasisKind::T: V.z.push_back(LaurentPoly::variable(V.vars, el.index - 1, 1)); break;
      case BasisKind::TStar: V.z.push_back(LaurentPoly::variable(V.vars, el.index - 1, -1)); break;
      case BasisKind::U: V.z.push_back(LaurentPoly::variable(V.vars, M.r() + el.index - 1, 1)); break;
      case BasisKind::UStar: V.z.push_back(LaurentPoly::variable(V.vars, M.r() + el.index - 1, -1)); break;
      case BasisKind::UOdd: V.z.push_back(LaurentPoly(V.vars, Rat(1))); break;
    }
    bool symplectic = el.kind == BasisKind::T || el.kind == BasisKind::TStar;
    (symplectic ? V.even : V.odd).push_back(b);
  }
  return V;
}

LaurentPoly strip_sum(const Partition& from, const Partition& to, const std::vector<StripLetter>& letters,
                      const LaurentPoly& zero) {
  if (!to.contains(from)) return zero;
  std::map<Partition, LaurentPoly> states{{from, zero + LaurentPoly(Rat(1))}};
  for (const auto& L : letters) {
    std::map<Partition, LaurentPoly> next;
    for (const auto& [nu, c] : states) {
      Partition bound = to;
      if (!L.vertical && L.max_row > 0) {
        std::vector<int> b(to.parts());
        for (int i = L.max_row; i < static_cast<int>(b.size()); ++i) b[i] = nu[i];
        bound = Partition(b);
      }
      auto strips = L.vertical ? vertical_strips_above(nu, bound) : horizontal_strips_above(nu, bound);
      for (const auto& p : strips) {
        int added = p.size() - nu.size();
        auto it = next.try_emplace(p, zero).first;
        it->second += c * L.z.pow(added);
      }
    }
    states = std::move(next);
  }
  auto it = states.find(to);
  return it == states.end() ? zero : it->second;
}

LaurentPoly skew_schur(const Partition& lambda, const Partition& mu, const std::vector<LaurentPoly>& vars,
                       const LaurentPoly& zero) {
  if (!lambda.contains(mu)) throw std::invalid_argument("skew shape needs mu inside lambda");
  std::vector<StripLetter> letters;
  for (const auto& z : vars) letters.push_back({z, false, 0});
  return strip_sum(mu, lambda, letters, zero);
}

LaurentPoly hook_schur(const Partition& lambda, const VariableMap& V) {
  std::vector<StripLetter> letters;
  for (int b : V.even) letters.push_back({V.z[b], false, 0});
  for (int b : V.odd) letters.push_back({V.z[b], true, 0});
  return strip_sum(Partition(), lambda, letters, V.zero());
}

LaurentPoly sp_schur(const Partition& lambda, const VariableMap& V) {
  std::vector<StripLetter> letters;
  for (std::size_t k = 0; k < V.even.size(); ++k)
    letters.push_back({V.z[V.even[k]], false, static_cast<int>(k) / 2 + 1});
  return strip_sum(Partition(), lambda, letters, V.zero());
}

namespace {

LaurentPoly power_sum(int l, const VariableMap& V, bool barred) {
  LaurentPoly p = V.zero();
  Rat alt = (l % 2 == 0) ? Rat(1) : Rat(-1);
  // barred: sum_B1 z^l - sum_B0 (-1)^l z^l ; plain: sum_B0 z^l - sum_B1 (-1)^l z^l
  for (int b : V.odd) p.add_scaled(V.z[b].pow(l), barred ? Rat(1) : -alt);
  for (int b : V.even) p.add_scaled(V.z[b].pow(l), barred ? -alt : Rat(1));
  return p;
}

}  // namespace

LaurentPoly p_bar(const Partition& mu, const VariableMap& V) {
  LaurentPoly p = V.one();
  for (int l : mu.parts()) p *= power_sum(l, V, true);
  return p;
}

LaurentPoly p_hook(const Partition& mu, const VariableMap& V) {
  LaurentPoly p = V.one();
  for (int l : mu.parts()) p *= power_sum(l, V, false);
  return p;
}

TruncSeries schur_series(const Partition& lambda, int q, int degree, std::shared_ptr<const VarNames> zvars) {
  TruncSeries out(q, degree, zvars);
  if (lambda.length() > q || lambda.size() > degree) return out;
  std::map<std::pair<Partition, std::vector<int>>, long long> states{{{Partition(), std::vector<int>(q, 0)}, 1}};
  for (int j = 0; j < q; ++j) {
    std::map<std::pair<Partition, std::vector<int>>, long long> next;
    for (const auto& [key, c] : states)
      for (const auto& p : horizontal_strips_above(key.first, lambda)) {
        auto e = key.second;
        e[j] += p.size() - key.first.size();
        next[{p, e}] += c;
      }
    states = std::move(next);
  }
  for (const auto& [key, c] : states)
    if (key.first == lambda) out.add(key.second, LaurentPoly(zvars, Rat(c)));
  return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> cur(lambda.length(), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == lambda.length()) {
      out.emplace_back(cur);
      return;
    }
    int hi = lambda[i];
    if (i > 0) hi = std::min(hi, cur[i - 1]);
    for (int v = 0; v <= hi; ++v) {
      cur[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

const std::vector<ScMethod>& all_sc_methods() {
  static const std::vector<ScMethod> all{ScMethod::LR_a,   ScMethod::LRconj_b,  ScMethod::gen_c,
                                         ScMethod::gen_d,  ScMethod::hdet_e,    ScMethod::edet_f,
                                         ScMethod::edet_g, ScMethod::sp_skew_h, ScMethod::sb_skew_i,
                                         ScMethod::tableaux_51};
  return all;
}

std::string method_name(ScMethod m) {
  switch (m) {
    case ScMethod::LR_a: return "LR_a";
    case ScMethod::LRconj_b: return "LRconj_b";
    case ScMethod::gen_c: return "gen_c";
    case ScMethod::gen_d: return "gen_d";
    case ScMethod::hdet_e: return "hdet_e";
    case ScMethod::edet_f: return "edet_f";
    case ScMethod::edet_g: return "edet_g";
    case ScMethod::sp_skew_h: return "sp_skew_h";
    case ScMethod::sb_skew_i: return "sb_skew_i";
    case ScMethod::tableaux_51: return "tableaux_51";
  }
  return "?";
}

std::optional<ScMethod> parse_method(std::string_view name) {
  static const std::map<std::string, ScMethod, std::less<>> aliases{
      {"a", ScMethod::LR_a},          {"b", ScMethod::LRconj_b},       {"c", ScMethod::gen_c},
      {"d", ScMethod::gen_d},         {"e", ScMethod::hdet_e},         {"f", ScMethod::edet_f},
      {"g", ScMethod::edet_g},        {"h", ScMethod::sp_skew_h},      {"i", ScMethod::sb_skew_i},
      {"tableaux", ScMethod::tableaux_51}, {"lr", ScMethod::LR_a},     {"lrconj", ScMethod::LRconj_b},
  };
  for (auto m : all_sc_methods())
    if (method_name(m) == name) return m;
  auto it = aliases.find(name);
  if (it != aliases.end()) return it->second;
  return std::nullopt;
}

int default_trunc_degree(const Partition& lambda) {
  if (const char* env = std::getenv("OSPO_TRUNC_DEGREE")) {
    int d = std::atoi(env);
    if (d >= lambda.size()) return d;
  }
  return lambda.size();
}

CharacterEngine::CharacterEngine(const ModuleData& M) : M_(M), V_(VariableMap::of(M)) {}

LaurentPoly CharacterEngine::hook(const Partition& lambda) {
  auto it = hook_cache_.find(lambda);
  if (it != hook_cache_.end()) return it->second;
  return hook_cache_[lambda] = hook_schur(lambda, V_);
}

LaurentPoly CharacterEngine::h(int l) {
  if (l < 0) return V_.zero();
  if (l == 0) return V_.one();
  return hook(Partition({l}));
}

LaurentPoly CharacterEngine::e(int l) {
  if (l < 0) return V_.zero();
  if (l == 0) return V_.one();
  return hook(Partition(std::vector<int>(l, 1)));
}

LaurentPoly CharacterEngine::sp(const Partition& lambda) {
  auto it = sp_cache_.find(lambda);
  if (it != sp_cache_.end()) return it->second;
  return sp_cache_[lambda] = sp_schur(lambda, V_);
}

TruncSeries CharacterEngine::generating_series(char which, int q, int degree) const {
  TruncSeries f = TruncSeries::one(q, degree, V_.vars);
  const auto& geo = (which == 'c' || which == '0') ? V_.even : V_.odd;
  const auto& plus = which == 'c' ? V_.odd : (which == 'd' ? V_.even : std::vector<int>{});
  for (int j = 0; j < q; ++j) {
    for (int b : plus) f.mul_one_plus(j, V_.z[b]);
    for (int b : geo) f.mul_geometric(j, V_.z[b]);
  }
  // the orthogonal-side identities need the diagonal factors (1 - y_i^2) too
  bool diagonal = which == 'd' || which == '1';
  for (int i = 0; i < q; ++i)
    for (int j = diagonal ? i : i + 1; j < q; ++j) f.mul_one_minus_pair(i, j);
  return f;
}

LaurentPoly CharacterEngine::series_coefficient(char which, const Partition& lambda) {
  auto key = std::make_pair(which, lambda);
  auto it = series_cache_.find(key);
  if (it != series_cache_.end()) return it->second;
  Partition target = which == 'd' ? lambda.conjugate() : lambda;
  int D = default_trunc_degree(target);
  int q = std::max(target.size(), M_.r() + M_.s()) + 1;
  q = std::max(q, target.length());
  auto series = [&](int qq) -> const TruncSeries& {
    auto k = std::make_tuple(which, qq, D);
    auto f = gen_cache_.find(k);
    if (f == gen_cache_.end()) f = gen_cache_.emplace(k, generating_series(which, qq, D)).first;
    return f->second;
  };
  LaurentPoly a = schur_coefficient(series(q), target.parts());
  LaurentPoly b = schur_coefficient(series(q + 1), target.parts());
  if (!(a == b))
    throw std::runtime_error("Schur coefficient not stable between q=" + std::to_string(q) + " and q+1 for " +
                             target.str());
  return series_cache_[key] = a;
}

LaurentPoly CharacterEngine::sc_even(const Partition& lambda) {
  auto it = sc0_cache_.find(lambda);
  if (it != sc0_cache_.end()) return it->second;
  return sc0_cache_[lambda] = series_coefficient('0', lambda);
}

LaurentPoly CharacterEngine::sb(const Partition& lambda) {
  auto it = sb_cache_.find(lambda);
  if (it != sb_cache_.end()) return it->second;
  return sb_cache_[lambda] = series_coefficient('1', lambda);
}

LaurentPoly CharacterEngine::lr_signed(const Partition& lambda, bool conjugate) {
  Partition target = conjugate ? lambda.conjugate() : lambda;
  auto family = conjugate ? enumerate_rho(target.size()) : enumerate_pi(target.size());
  LaurentPoly out = V_.zero();
  for (const auto& mu : subpartitions(target)) {
    long long coef = 0;
    for (const auto& p : family) {
      if (p.size() + mu.size() != target.size()) continue;
      long long c = lr_coefficient(mu, p, target);
      coef += ((p.size() / 2) % 2 ? -c : c);
    }
    if (coef != 0) out.add_scaled(hook(conjugate ? mu.conjugate() : mu), Rat(coef));
  }
  return out;
}

LaurentPoly CharacterEngine::det_h(const Partition& lambda) {
  int n = lambda.length();
  PolyMatrix A(n, std::vector<LaurentPoly>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) A[i - 1][j - 1] = h(lambda[i - 1] - i - j + 2) + h(lambda[i - 1] - i + j);
  return det_poly(A) * Rat(1, 2);
}

LaurentPoly CharacterEngine::det_e_half(const Partition& lambda) {
  Partition c = lambda.conjugate();
  int n = c.length();
  PolyMatrix A(n, std::vector<LaurentPoly>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int ci = c[i - 1];
      A[i - 1][j - 1] = (e(ci - i - j + 2) - e(ci - i - j)) + (e(ci - i + j) - e(ci - i + j - 2));
    }
  return det_poly(A) * Rat(1, 2);
}

LaurentPoly CharacterEngine::det_e(const Partition& lambda) {
  Partition c = lambda.conjugate();
  int n = c.length();
  PolyMatrix A(n, std::vector<LaurentPoly>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) A[i - 1][j - 1] = e(c[i - 1] - i + j) - e(c[i - 1] - i - j);
  return det_poly(A);
}

LaurentPoly CharacterEngine::tableau_sum(const Partition& lambda) {
  Alphabet A{M_.r(), M_.n()};
  LaurentPoly out = V_.zero();
  for (const auto& T : spo_tableaux(lambda, A)) {
    LaurentPoly w = V_.one();
    for (const auto& row : T)
      for (int x : row) w *= V_.z[x];
    out += w;
  }
  return out;
}

LaurentPoly CharacterEngine::sc(const Partition& lambda, ScMethod method) {
  if (lambda.empty()) return V_.one();
  switch (method) {
    case ScMethod::LR_a: return lr_signed(lambda, false);
    case ScMethod::LRconj_b: return lr_signed(lambda, true);
    case ScMethod::gen_c: return series_coefficient('c', lambda);
    case ScMethod::gen_d: return series_coefficient('d', lambda);
    case ScMethod::hdet_e: return det_h(lambda);
    case ScMethod::edet_f: return det_e_half(lambda);
    case ScMethod::edet_g: return det_e(lambda);
    case ScMethod::sp_skew_h: {
      std::vector<LaurentPoly> z1;
      for (int b : V_.odd) z1.push_back(V_.z[b]);
      LaurentPoly out = V_.zero();
      Partition lc = lambda.conjugate();
      for (const auto& mu : subpartitions(lambda))
        out += sc_even(mu) * skew_schur(lc, mu.conjugate(), z1, V_.zero());
      return out;
    }
    case ScMethod::sb_skew_i: {
      std::vector<LaurentPoly> z0;
      for (int b : V_.even) z0.push_back(V_.z[b]);
      LaurentPoly out = V_.zero();
      for (const auto& mu : subpartitions(lambda))
        out += sb(mu.conjugate()) * skew_schur(lambda, mu, z0, V_.zero());
      return out;
    }
    case ScMethod::tableaux_51: return tableau_sum(lambda);
  }
  throw std::invalid_argument("unknown method");
}

LaurentPoly CharacterEngine::weighted_trace(const BrauerDiagram& d) {
  int k = d.k();
  // exponent contribution of each basis element
  std::vector<std::pair<int, int>> zexp;
  for (int b = 0; b < M_.dim(); ++b) {
    const auto& t = V_.z[b].terms();
    const auto& e = t.begin()->first;
    int var = -1, pw = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) var = static_cast<int>(i), pw = e[i];
    zexp.emplace_back(var, pw);
  }
  LaurentPoly out = V_.zero();
  for (const auto& w : all_words(M_.dim(), k)) {
    Rat c = diagram_weight(d, w, w, M_);
    if (c.is_zero()) continue;
    Exponents e(V_.vars->size(), 0);
    for (int b : w)
      if (zexp[b].first >= 0) e[zexp[b].first] += zexp[b].second;
    out.add_term(e, c);
  }
  return out;
}

LaurentPoly sc_lambda(const Partition& lambda, const ModuleData& M, ScMethod method) {
  CharacterEngine eng(M);
  return eng.sc(lambda, method);
}

LaurentPoly weighted_trace(const BrauerDiagram& d, const ModuleData& M) {
  CharacterEngine eng(M);
  return eng.weighted_trace(d);
}

}  // namespace ospo
