#include "ospo/series.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ospo {

TruncSeries::TruncSeries(int q, int degree, std::shared_ptr<const VarNames> zvars)
    : q_(q), degree_(degree), zvars_(std::move(zvars)) {
  if (q < 0 || degree < 0) throw std::invalid_argument("series needs q >= 0 and D >= 0");
}

TruncSeries TruncSeries::one(int q, int degree, std::shared_ptr<const VarNames> zvars) {
  TruncSeries s(q, degree, zvars);
  s.coef_.emplace(YMono(q, 0), LaurentPoly(zvars, Rat(1)));
  return s;
}

LaurentPoly TruncSeries::coefficient(const YMono& m) const {
  auto it = coef_.find(m);
  return it == coef_.end() ? LaurentPoly(zvars_) : it->second;
}

void TruncSeries::add(const YMono& m, const LaurentPoly& c) {
  if (static_cast<int>(m.size()) != q_) throw std::invalid_argument("y-monomial length mismatch");
  if (std::accumulate(m.begin(), m.end(), 0) > degree_) return;
  for (int x : m)
    if (x < 0) throw std::invalid_argument("negative y exponent");
  auto it = coef_.find(m);
  if (it == coef_.end()) {
    if (!c.is_zero()) coef_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coef_.erase(it);
}

void TruncSeries::check_compatible(const TruncSeries& o) const {
  if (q_ != o.q_ || degree_ != o.degree_) throw std::invalid_argument("series with different q or D");
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  check_compatible(o);
  TruncSeries r(q_, degree_, zvars_);
  YMono m(q_);
  for (auto& [a, ca] : coef_) {
    int da = std::accumulate(a.begin(), a.end(), 0);
    for (auto& [b, cb] : o.coef_) {
      int db = std::accumulate(b.begin(), b.end(), 0);
      if (da + db > degree_) continue;
      for (int i = 0; i < q_; ++i) m[i] = a[i] + b[i];
      r.add(m, ca * cb);
    }
  }
  return r;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  check_compatible(o);
  TruncSeries r = *this;
  for (auto& [m, c] : o.coef_) r.add(m, c);
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
  check_compatible(o);
  TruncSeries r = *this;
  for (auto& [m, c] : o.coef_) r.add(m, -c);
  return r;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
  return a.q_ == b.q_ && a.degree_ == b.degree_ && a.coef_ == b.coef_;
}

TruncSeries TruncSeries::inverse() const {
  LaurentPoly c0 = coefficient(YMono(q_, 0));
  if (c0.is_zero()) throw std::domain_error("series with zero constant term is not invertible");
  if (!c0.is_monomial()) throw std::domain_error("constant term is not a unit");
  LaurentPoly c0inv = c0.pow(-1);
  // f = c0 (1 - g), f^-1 = c0^-1 sum g^k
  TruncSeries g(q_, degree_, zvars_);
  for (auto& [m, c] : coef_) {
    if (std::accumulate(m.begin(), m.end(), 0) == 0) continue;
    g.add(m, -(c * c0inv));
  }
  TruncSeries sum = one(q_, degree_, zvars_), power = one(q_, degree_, zvars_);
  for (int k = 1; k <= degree_; ++k) {
    power = power * g;
    sum = sum + power;
  }
  TruncSeries out(q_, degree_, zvars_);
  for (auto& [m, c] : sum.coef_) out.add(m, c * c0inv);
  return out;
}

void TruncSeries::mul_one_plus(int j, const LaurentPoly& c) {
  // process in decreasing y_j degree so sources are still unmodified
  std::vector<std::pair<YMono, LaurentPoly>> items(coef_.begin(), coef_.end());
  std::sort(items.begin(), items.end(),
            [j](auto& a, auto& b) { return a.first[j] > b.first[j]; });
  for (auto& [m, v] : items) {
    YMono n = m;
    ++n[j];
    add(n, c * v);
  }
}

void TruncSeries::mul_geometric(int j, const LaurentPoly& c) {
  // new[m] = old[m] + c * new[m - e_j], increasing y_j degree
  std::vector<YMono> keys;
  for (auto& m : monomials_up_to(q_, degree_)) keys.push_back(m);
  std::stable_sort(keys.begin(), keys.end(), [j](auto& a, auto& b) { return a[j] < b[j]; });
  for (auto& m : keys) {
    if (m[j] == 0) continue;
    YMono prev = m;
    --prev[j];
    auto it = coef_.find(prev);
    if (it == coef_.end()) continue;
    add(m, c * it->second);
  }
}

void TruncSeries::mul_one_minus_pair(int i, int j) {
  std::vector<std::pair<YMono, LaurentPoly>> items(coef_.begin(), coef_.end());
  for (auto& [m, v] : items) {
    YMono n = m;
    ++n[i];
    ++n[j];
    add(n, -v);
  }
}

TruncSeries TruncSeries::geometric(int q, int degree, std::shared_ptr<const VarNames> zvars,
                                   const YMono& y, const LaurentPoly& c) {
  int dy = std::accumulate(y.begin(), y.end(), 0);
  if (dy <= 0) throw std::invalid_argument("geometric series needs a monomial of positive degree");
  TruncSeries s = one(q, degree, zvars);
  YMono m(q, 0);
  LaurentPoly ck(zvars, Rat(1));
  for (int k = 1; k * dy <= degree; ++k) {
    for (int i = 0; i < q; ++i) m[i] += y[i];
    ck = ck * c;
    s.add(m, ck);
  }
  return s;
}

static void gen_monomials(int q, int left, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == q) {
    out.push_back(cur);
    return;
  }
  for (int a = 0; a <= left; ++a) {
    cur.push_back(a);
    gen_monomials(q, left - a, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> monomials_up_to(int q, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  gen_monomials(q, degree, cur, out);
  return out;
}

LaurentPoly schur_coefficient(const TruncSeries& f, const std::vector<int>& lambda) {
  int q = f.q();
  if (static_cast<int>(lambda.size()) > q) return LaurentPoly(f.zvars());
  int total = std::accumulate(lambda.begin(), lambda.end(), 0);
  if (total > f.degree()) throw std::domain_error("truncation degree below |lambda|");
  // target exponent lambda + delta, delta = (q-1, ..., 0)
  std::vector<int> target(q);
  for (int i = 0; i < q; ++i)
    target[i] = (i < static_cast<int>(lambda.size()) ? lambda[i] : 0) + (q - 1 - i);
  std::vector<int> perm(q);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly out(f.zvars());
  std::vector<int> need(q);
  do {
    // a_delta term: sgn(perm) * prod y_i^{delta_{perm(i)}}
    bool ok = true;
    for (int i = 0; i < q && ok; ++i) {
      need[i] = target[i] - (q - 1 - perm[i]);
      if (need[i] < 0) ok = false;
    }
    if (!ok) continue;
    auto& coefs = f.coefficients();
    auto it = coefs.find(need);
    if (it == coefs.end()) continue;
    int inv = 0;
    for (int a = 0; a < q; ++a)
      for (int b = a + 1; b < q; ++b)
        if (perm[a] > perm[b]) ++inv;
    out.add_scaled(it->second, Rat(inv % 2 ? -1 : 1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace ospo
