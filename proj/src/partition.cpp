#include "ospo/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ospo {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must weakly decrease");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 0; i < mu.length(); ++i)
    if (mu[i] > (*this)[i]) return false;
  return true;
}

bool Partition::all_even() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; });
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(parts_.empty() ? 1 : parts_[0] + 1, 0);
  for (int p : parts_) ++m[p];
  return m;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

Frobenius frobenius(const Partition& p) {
  Partition c = p.conjugate();
  Frobenius f;
  for (int i = 0; i < p.length() && p[i] > i; ++i) f.emplace_back(p[i] - i - 1, c[i] - i - 1);
  return f;
}

Partition from_frobenius(const Frobenius& f) {
  int d = static_cast<int>(f.size());
  for (int i = 0; i < d; ++i) {
    if (f[i].first < 0 || f[i].second < 0) throw std::invalid_argument("negative Frobenius coordinate");
    if (i && (f[i].first >= f[i - 1].first || f[i].second >= f[i - 1].second))
      throw std::invalid_argument("Frobenius coordinates must strictly decrease");
  }
  if (d == 0) return {};
  // row i < d: i + 1 + arm_i; rows below the diagonal from the legs
  int rows = d + f[0].second;
  std::vector<int> parts(rows, 0);
  for (int i = 0; i < d; ++i) parts[i] = i + 1 + f[i].first;
  for (int j = 0; j < d; ++j)
    for (int i = j + 1; i <= j + f[j].second; ++i)
      if (i >= d) ++parts[i];
  // rows below d also receive columns j < d only
  return Partition(parts);
}

static void gen_parts(int n, int maxp, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(n, maxp); p >= 1; --p) {
    cur.push_back(p);
    gen_parts(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (n >= 0) gen_parts(n, n, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(int max) {
  std::vector<Partition> out;
  for (int n = 0; n <= max; ++n)
    for (auto& p : partitions_of(n)) out.push_back(p);
  return out;
}

static std::vector<Partition> filter_frobenius(int max, int shift) {
  std::vector<Partition> out;
  for (auto& p : partitions_up_to(max)) {
    bool ok = true;
    for (auto [a, l] : frobenius(p))
      if (a != l + shift) ok = false;
    if (ok) out.push_back(p);
  }
  return out;
}

std::vector<Partition> enumerate_rho(int max) { return filter_frobenius(max, 1); }
std::vector<Partition> enumerate_pi(int max) { return filter_frobenius(max, -1); }

std::vector<Partition> enumerate_even(int max) {
  std::vector<Partition> out;
  for (auto& p : partitions_up_to(max))
    if (p.all_even()) out.push_back(p);
  return out;
}

std::vector<Partition> horizontal_strips_above(const Partition& mu, const Partition& bound) {
  // nu_1 <= bound_1, mu_i <= nu_i <= min(mu_{i-1}, bound_i)
  std::vector<Partition> out;
  int rows = std::min(mu.length() + 1, std::max(bound.length(), mu.length()));
  if (!bound.contains(mu)) return out;
  std::vector<int> cur(rows, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == rows) {
      out.emplace_back(cur);
      return;
    }
    int hi = bound[i];
    if (i > 0) hi = std::min(hi, mu[i - 1]);
    for (int v = mu[i]; v <= hi; ++v) {
      cur[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<Partition> vertical_strips_above(const Partition& mu, const Partition& bound) {
  std::vector<Partition> out;
  for (auto& p : horizontal_strips_above(mu.conjugate(), bound.conjugate())) out.push_back(p.conjugate());
  return out;
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long long z_mu(const Partition& mu) {
  auto m = mu.multiplicities();
  long long z = 1;
  for (int i = 1; i < static_cast<int>(m.size()); ++i) {
    for (int k = 0; k < m[i]; ++k) z *= i;
    z *= factorial(m[i]);
  }
  return z;
}

}  // namespace ospo
