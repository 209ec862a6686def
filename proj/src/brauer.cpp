#include "ospo/brauer.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace ospo {

BrauerDiagram BrauerDiagram::identity(int k) { return from_perm(identity_perm(k)); }

BrauerDiagram BrauerDiagram::from_edges(int k, const std::vector<std::pair<int, int>>& edges) {
  BrauerDiagram d;
  d.k_ = k;
  d.partner_.assign(2 * k, -1);
  auto idx = [k](int v) {
    if (v == 0 || v > k || v < -k) throw std::invalid_argument("diagram vertex out of range");
    return v > 0 ? v - 1 : k + (-v) - 1;
  };
  for (auto [a, b] : edges) {
    int x = idx(a), y = idx(b);
    if (x == y || d.partner_[x] >= 0 || d.partner_[y] >= 0)
      throw std::invalid_argument("diagram edges must form a perfect matching");
    d.partner_[x] = y;
    d.partner_[y] = x;
  }
  for (int p : d.partner_)
    if (p < 0) throw std::invalid_argument("diagram leaves a vertex unmatched");
  return d;
}

BrauerDiagram BrauerDiagram::from_perm(const Perm& p) {
  int k = static_cast<int>(p.size());
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i) e.emplace_back(i + 1, -(p[i] + 1));
  return from_edges(k, e);
}

std::vector<std::pair<int, int>> BrauerDiagram::edges() const {
  auto sgn = [this](int v) { return v < k_ ? v + 1 : -(v - k_ + 1); };
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < 2 * k_; ++v) {
    int w = partner_[v];
    if (w < v) continue;
    out.emplace_back(sgn(v), sgn(w));  // v < w so tops come first
  }
  auto key = [](int v) { return std::pair<int, int>(v < 0, std::abs(v)); };
  std::sort(out.begin(), out.end(), [&](auto& a, auto& b) { return key(a.first) < key(b.first); });
  return out;
}

bool BrauerDiagram::is_permutation() const {
  for (int v = 0; v < k_; ++v)
    if (partner_[v] < k_) return false;
  return true;
}

Perm BrauerDiagram::permutation() const {
  if (!is_permutation()) throw std::invalid_argument("diagram is not a permutation");
  Perm p(k_);
  for (int v = 0; v < k_; ++v) p[v] = partner_[v] - k_;
  return p;
}

int BrauerDiagram::horizontal_top_count() const {
  int c = 0;
  for (int v = 0; v < k_; ++v)
    if (partner_[v] < k_) ++c;
  return c / 2;
}

static std::string vertex_str(int v) { return v > 0 ? std::to_string(v) : std::to_string(-v) + "'"; }

std::string BrauerDiagram::str() const {
  std::string s = "(";
  for (auto [a, b] : edges()) s += "(" + vertex_str(a) + "," + vertex_str(b) + ")";
  return s + ")";
}

// reads "(a,b)(c,d)..." wrapped in one outer pair of parentheses
static std::vector<std::pair<std::string, std::string>> read_pairs(std::string_view text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw std::invalid_argument("expected ((a,b)...)");
  t = t.substr(1, t.size() - 2);
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t i = 0;
  while (i < t.size()) {
    if (t[i] != '(') throw std::invalid_argument("expected '(' in pair list");
    auto close = t.find(')', i);
    auto comma = t.find(',', i);
    if (close == std::string::npos || comma == std::string::npos || comma > close)
      throw std::invalid_argument("malformed pair");
    out.emplace_back(t.substr(i + 1, comma - i - 1), t.substr(comma + 1, close - comma - 1));
    i = close + 1;
  }
  return out;
}

static int parse_vertex(const std::string& s) {
  bool bottom = !s.empty() && s.back() == '\'';
  std::string digits = bottom ? s.substr(0, s.size() - 1) : s;
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw std::invalid_argument("bad diagram vertex '" + s + "'");
  int v = std::stoi(digits);
  return bottom ? -v : v;
}

BrauerDiagram BrauerDiagram::parse(std::string_view text) {
  std::vector<std::pair<int, int>> e;
  int k = 0;
  for (auto& [a, b] : read_pairs(text)) {
    e.emplace_back(parse_vertex(a), parse_vertex(b));
    k = std::max({k, std::abs(e.back().first), std::abs(e.back().second)});
  }
  if (static_cast<int>(e.size()) != k) throw std::invalid_argument("diagram needs exactly k edges");
  return from_edges(k, e);
}

DiagramProduct multiply(const BrauerDiagram& d1, const BrauerDiagram& d2) {
  int k = d1.k();
  if (d2.k() != k) throw std::invalid_argument("multiplying diagrams of different sizes");
  std::vector<char> mid(k, 0);
  std::vector<int> res(2 * k, -1);
  // outer vertex ids: 0..k-1 top of d1, k..2k-1 bottom of d2
  auto from_top = [&](int v) {
    int cur = d1.partner(v);
    while (true) {
      if (cur < k) return cur;
      int m = cur - k;
      mid[m] = 1;
      int nxt = d2.partner(m);
      if (nxt >= k) return nxt;
      mid[nxt] = 1;
      cur = d1.partner(k + nxt);
    }
  };
  auto from_bottom = [&](int v) {
    int cur = d2.partner(v);
    while (true) {
      if (cur >= k) return cur;
      mid[cur] = 1;
      int nxt = d1.partner(k + cur);
      if (nxt < k) return nxt;
      mid[nxt - k] = 1;
      cur = d2.partner(nxt - k);
    }
  };
  for (int v = 0; v < k; ++v)
    if (res[v] < 0) {
      int w = from_top(v);
      res[v] = w;
      res[w] = v;
    }
  for (int v = k; v < 2 * k; ++v)
    if (res[v] < 0) {
      int w = from_bottom(v);
      res[v] = w;
      res[w] = v;
    }
  int loops = 0;
  for (int m = 0; m < k; ++m) {
    if (mid[m]) continue;
    ++loops;
    int cur = m;
    do {
      mid[cur] = 1;
      int below = d1.partner(k + cur) - k;  // stays in the middle row
      mid[below] = 1;
      cur = d2.partner(below);
    } while (!mid[cur]);
  }
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < 2 * k; ++v)
    if (v < res[v]) e.emplace_back(v < k ? v + 1 : -(v - k + 1), res[v] < k ? res[v] + 1 : -(res[v] - k + 1));
  return {loops, BrauerDiagram::from_edges(k, e)};
}

OneFactor unfold(const BrauerDiagram& d) {
  int k = d.k();
  // bottom j' -> j, top i -> 2k+1-i
  auto pos = [k](int v) { return v < k ? 2 * k - v : v - k + 1; };
  OneFactor f;
  for (int v = 0; v < 2 * k; ++v) {
    int w = d.partner(v);
    int a = pos(v), b = pos(w);
    if (a < b) f.emplace_back(a, b);
  }
  std::sort(f.begin(), f.end());
  return f;
}

BrauerDiagram fold(const OneFactor& f) {
  int k = static_cast<int>(f.size());
  auto vert = [k](int x) { return x <= k ? -x : 2 * k + 1 - x; };
  std::vector<std::pair<int, int>> e;
  for (auto [a, b] : f) e.emplace_back(vert(a), vert(b));
  return BrauerDiagram::from_edges(k, e);
}

std::string onefactor_str(const OneFactor& f) {
  std::string s = "(";
  for (auto [a, b] : f) s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  return s + ")";
}

OneFactor parse_onefactor(std::string_view text) {
  OneFactor f;
  for (auto& [a, b] : read_pairs(text)) {
    int x = parse_vertex(a), y = parse_vertex(b);
    if (x <= 0 || y <= 0) throw std::invalid_argument("one-factor vertices are unprimed");
    f.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(f.begin(), f.end());
  std::vector<int> seen(2 * f.size() + 1, 0);
  for (auto [a, b] : f) {
    if (a == b || b > static_cast<int>(2 * f.size()) || seen[a]++ || seen[b]++)
      throw std::invalid_argument("pairs must partition 1..2k");
  }
  return f;
}

std::vector<int> pi_f(const OneFactor& f) {
  int k = static_cast<int>(f.size());
  std::vector<int> img(2 * k);
  for (int i = 0; i < k; ++i) {
    img[i] = f[i].first;
    img[k + i] = f[k - 1 - i].second;
  }
  return img;
}

std::vector<OneFactor> all_onefactors(int twok) {
  std::vector<OneFactor> out;
  std::vector<char> used(twok + 1, 0);
  OneFactor cur;
  std::function<void()> rec = [&]() {
    int first = 1;
    while (first <= twok && used[first]) ++first;
    if (first > twok) {
      out.push_back(cur);
      return;
    }
    used[first] = 1;
    for (int b = first + 1; b <= twok; ++b) {
      if (used[b]) continue;
      used[b] = 1;
      cur.emplace_back(first, b);
      rec();
      cur.pop_back();
      used[b] = 0;
    }
    used[first] = 0;
  };
  rec();
  return out;
}

std::vector<BrauerDiagram> all_diagrams(int k) {
  std::vector<BrauerDiagram> out;
  for (auto& f : all_onefactors(2 * k)) out.push_back(fold(f));
  std::sort(out.begin(), out.end());
  return out;
}

std::string word_str(const GeneratorWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::string(1, w[i].kind) + std::to_string(w[i].index);
  return s;
}

GeneratorWord parse_word(std::string_view text) {
  GeneratorWord w;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) {
    if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'e')) throw std::invalid_argument("bad generator '" + tok + "'");
    w.push_back({tok[0], std::stoi(tok.substr(1))});
  }
  return w;
}

BrauerDiagram gen_s(int k, int i) {
  if (i < 1 || i >= k) throw std::out_of_range("generator index out of range");
  Perm p = identity_perm(k);
  std::swap(p[i - 1], p[i]);
  return BrauerDiagram::from_perm(p);
}

BrauerDiagram gen_e(int k, int i) {
  if (i < 1 || i >= k) throw std::out_of_range("generator index out of range");
  std::vector<std::pair<int, int>> e{{i, i + 1}, {-i, -(i + 1)}};
  for (int v = 1; v <= k; ++v)
    if (v != i && v != i + 1) e.emplace_back(v, -v);
  return BrauerDiagram::from_edges(k, e);
}

BrauerDiagram gamma(int m) {
  if (m < 1) throw std::out_of_range("cycle length must be positive");
  Perm p(m);
  for (int i = 0; i < m; ++i) p[i] = (i + 1) % m;
  return BrauerDiagram::from_perm(p);
}

BrauerDiagram tensor(const BrauerDiagram& left, const BrauerDiagram& right) {
  int a = left.k(), b = right.k(), k = a + b;
  std::vector<std::pair<int, int>> e;
  auto shift = [](int v, int by) { return v > 0 ? v + by : v - by; };
  for (auto [x, y] : left.edges()) e.emplace_back(x, y);
  for (auto [x, y] : right.edges()) e.emplace_back(shift(x, a), shift(y, a));
  return BrauerDiagram::from_edges(k, e);
}

BrauerDiagram gamma_mu(const Partition& mu) {
  BrauerDiagram d = BrauerDiagram::identity(0);
  for (int part : mu.parts()) d = tensor(d, gamma(part));
  return d;
}

BrauerDiagram e_pow_gamma(int j, const Partition& mu) {
  if (j < 0) throw std::out_of_range("negative power of e");
  BrauerDiagram d = BrauerDiagram::identity(0);
  for (int i = 0; i < j; ++i) d = tensor(d, gen_e(2, 1));
  return tensor(d, gamma_mu(mu));
}

BrauerDiagram contraction(int k, int p, int q) {
  if (p < 1 || q < 1 || p > k || q > k || p == q) throw std::out_of_range("contraction indices");
  std::vector<std::pair<int, int>> e{{p, q}, {-p, -q}};
  for (int v = 1; v <= k; ++v)
    if (v != p && v != q) e.emplace_back(v, -v);
  return BrauerDiagram::from_edges(k, e);
}

GeneratorWord permutation_word(const Perm& p) {
  Perm a = p;
  GeneratorWord w;
  int n = static_cast<int>(a.size());
  for (int pass = 0; pass < n; ++pass)
    for (int j = 0; j + 1 < n; ++j)
      if (a[j] > a[j + 1]) {
        std::swap(a[j], a[j + 1]);
        w.push_back({'s', j + 1});
      }
  return w;
}

DiagramProduct evaluate_word(int k, const GeneratorWord& w) {
  DiagramProduct acc{0, BrauerDiagram::identity(k)};
  for (auto g : w) {
    auto step = multiply(acc.diagram, g.kind == 's' ? gen_s(k, g.index) : gen_e(k, g.index));
    acc.loops += step.loops;
    acc.diagram = step.diagram;
  }
  return acc;
}

GeneratorWord factorize(const BrauerDiagram& d) {
  int k = d.k();
  std::vector<std::pair<int, int>> top_pairs, bottom_pairs, verticals;
  for (int v = 0; v < 2 * k; ++v) {
    int w = d.partner(v);
    if (w < v) continue;
    if (w < k)
      top_pairs.emplace_back(v, w);
    else if (v >= k)
      bottom_pairs.emplace_back(v - k, w - k);
    else
      verticals.emplace_back(v, w - k);
  }
  int j = static_cast<int>(top_pairs.size());
  Perm s1(k), s2(k);
  for (int t = 0; t < j; ++t) {
    s1[top_pairs[t].first] = 2 * t;
    s1[top_pairs[t].second] = 2 * t + 1;
    s2[2 * t] = bottom_pairs[t].first;
    s2[2 * t + 1] = bottom_pairs[t].second;
  }
  for (std::size_t t = 0; t < verticals.size(); ++t) {
    s1[verticals[t].first] = 2 * j + static_cast<int>(t);
    s2[2 * j + t] = verticals[t].second;
  }
  GeneratorWord w = permutation_word(s1);
  for (int t = 0; t < j; ++t) w.push_back({'e', 2 * t + 1});
  for (auto g : permutation_word(s2)) w.push_back(g);
  auto check = evaluate_word(k, w);
  if (check.loops != 0 || check.diagram != d) throw std::logic_error("factorization failed to reproduce the diagram");
  return w;
}

AlgebraElement AlgebraElement::basis(const BrauerDiagram& d, Rat eta, Rat coef) {
  AlgebraElement a(d.k(), std::move(eta));
  a.add(d, coef);
  return a;
}

void AlgebraElement::add(const BrauerDiagram& d, const Rat& c) {
  if (d.k() != k_) throw std::invalid_argument("diagram size differs from the algebra");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(d, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  if (o.k_ != k_ || o.eta_ != eta_) throw std::invalid_argument("elements of different algebras");
  AlgebraElement r = *this;
  for (auto& [d, c] : o.terms_) r.add(d, c);
  return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  if (o.k_ != k_ || o.eta_ != eta_) throw std::invalid_argument("elements of different algebras");
  AlgebraElement r(k_, eta_);
  for (auto& [d1, c1] : terms_)
    for (auto& [d2, c2] : o.terms_) {
      auto p = multiply(d1, d2);
      r.add(p.diagram, c1 * c2 * eta_.pow(p.loops));
    }
  return r;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [d, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += c.str() + "*" + d.str();
  }
  return s;
}

std::vector<RelationResult> presentation_check(int k, const Rat& eta) {
  if (k < 2) throw std::invalid_argument("presentation check needs k >= 2");
  auto S = [&](int i) { return AlgebraElement::basis(gen_s(k, i), eta); };
  auto E = [&](int i) { return AlgebraElement::basis(gen_e(k, i), eta); };
  AlgebraElement one = AlgebraElement::basis(BrauerDiagram::identity(k), eta);
  std::vector<RelationResult> out;
  auto rel = [&](const std::string& name, auto&& body) {
    RelationResult r{name, true, ""};
    body(r);
    out.push_back(r);
  };
  auto expect = [](RelationResult& r, const AlgebraElement& lhs, const AlgebraElement& rhs, const std::string& where) {
    if (r.passed && !(lhs == rhs)) {
      r.passed = false;
      r.counterexample = where + ": " + lhs.str() + " != " + rhs.str();
    }
  };
  auto tag = [](std::string n, int i, int j = 0) {
    return n + " i=" + std::to_string(i) + (j ? " j=" + std::to_string(j) : "");
  };
  AlgebraElement eta_e(k, eta);
  rel("s_i^2 = 1", [&](auto& r) { for (int i = 1; i < k; ++i) expect(r, S(i) * S(i), one, tag("", i)); });
  rel("e_i^2 = eta e_i", [&](auto& r) {
    for (int i = 1; i < k; ++i) {
      AlgebraElement rhs(k, eta);
      rhs.add(gen_e(k, i), eta);
      expect(r, E(i) * E(i), rhs, tag("", i));
    }
  });
  rel("e_i s_i = e_i", [&](auto& r) { for (int i = 1; i < k; ++i) expect(r, E(i) * S(i), E(i), tag("", i)); });
  rel("s_i e_i = e_i", [&](auto& r) { for (int i = 1; i < k; ++i) expect(r, S(i) * E(i), E(i), tag("", i)); });
  rel("s_i s_j = s_j s_i, |i-j|>1", [&](auto& r) {
    for (int i = 1; i < k; ++i)
      for (int j = i + 2; j < k; ++j) expect(r, S(i) * S(j), S(j) * S(i), tag("", i, j));
  });
  rel("s_i e_j = e_j s_i, |i-j|>1", [&](auto& r) {
    for (int i = 1; i < k; ++i)
      for (int j = 1; j < k; ++j)
        if (std::abs(i - j) > 1) expect(r, S(i) * E(j), E(j) * S(i), tag("", i, j));
  });
  rel("e_i e_j = e_j e_i, |i-j|>1", [&](auto& r) {
    for (int i = 1; i < k; ++i)
      for (int j = i + 2; j < k; ++j) expect(r, E(i) * E(j), E(j) * E(i), tag("", i, j));
  });
  rel("s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}", [&](auto& r) {
    for (int i = 1; i + 1 < k; ++i) expect(r, S(i) * S(i + 1) * S(i), S(i + 1) * S(i) * S(i + 1), tag("", i));
  });
  rel("e_i e_{i+1} e_i = e_i", [&](auto& r) {
    for (int i = 1; i + 1 < k; ++i) expect(r, E(i) * E(i + 1) * E(i), E(i), tag("", i));
  });
  rel("e_{i+1} e_i e_{i+1} = e_{i+1}", [&](auto& r) {
    for (int i = 1; i + 1 < k; ++i) expect(r, E(i + 1) * E(i) * E(i + 1), E(i + 1), tag("", i));
  });
  rel("s_i e_{i+1} e_i = s_{i+1} e_i", [&](auto& r) {
    for (int i = 1; i + 1 < k; ++i) expect(r, S(i) * E(i + 1) * E(i), S(i + 1) * E(i), tag("", i));
  });
  rel("e_{i+1} e_i s_{i+1} = e_{i+1} s_i", [&](auto& r) {
    for (int i = 1; i + 1 < k; ++i) expect(r, E(i + 1) * E(i) * S(i + 1), E(i + 1) * S(i), tag("", i));
  });
  (void)eta_e;
  return out;
}

Rat brauer_character(const Partition& lambda, int j, const Partition& mu, const Rat& eta) {
  int k = 2 * j + mu.size();
  if (j < 0 || lambda.size() > k || (k - lambda.size()) % 2)
    throw std::invalid_argument("lambda does not label a B_k irreducible for this element");
  long long sum = 0;
  for (auto& nu : partitions_of(mu.size())) {
    if (!nu.contains(lambda)) continue;
    long long mult = 0;
    for (auto& theta : partitions_of(nu.size() - lambda.size()))
      if (theta.all_even()) mult += lr_coefficient(lambda, theta, nu);
    if (mult) sum += mult * sym_character(nu, mu);
  }
  return eta.pow(j) * Rat(static_cast<long>(sum));
}

}  // namespace ospo
