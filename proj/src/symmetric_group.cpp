#include "ospo/symmetric_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ospo {

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& first, const Perm& then) {
  Perm r(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) r[i] = then[first[i]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

int perm_sign(const Perm& p) {
  int n = static_cast<int>(p.size()), s = 1;
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

Partition cycle_type(const Perm& p) {
  int n = static_cast<int>(p.size());
  std::vector<char> seen(n, 0);
  std::vector<int> lens;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return Partition(lens);
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// beta numbers lambda_i + (len - 1 - i); removing a rim hook of length h
// moves one bead down by h
static long long mn_rec(std::vector<int> beta, const std::vector<int>& mu, std::size_t idx) {
  if (idx == mu.size()) return 1;
  int h = mu[idx];
  long long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int b = beta[i] - h;
    if (b < 0) continue;
    if (std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
    int between = 0;
    for (int x : beta)
      if (x > b && x < beta[i]) ++between;
    std::vector<int> nb = beta;
    nb[i] = b;
    long long sub = mn_rec(nb, mu, idx + 1);
    total += (between % 2 ? -sub : sub);
  }
  return total;
}

long long sym_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("character needs |lambda| = |mu|");
  int len = lambda.length();
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
  return mn_rec(beta, mu.parts(), 0);
}

namespace {

struct LrFill {
  const Partition& lambda;
  const Partition& mu;
  const Partition& nu;
  std::vector<std::vector<int>> grid;  // entries per row, indexed by column
  std::vector<int> count;
  long long found = 0;

  // fill row i from the right end towards mu_i
  void rec(int i, int j) {
    if (i == lambda.length()) {
      ++found;
      return;
    }
    if (j < mu[i]) {
      rec(i + 1, lambda[i + 1] - 1);
      return;
    }
    int hi = (j + 1 < lambda[i]) ? grid[i][j + 1] : nu.length();
    int lo = 1;
    if (i > 0 && j < lambda[i - 1] && j >= mu[i - 1]) lo = grid[i - 1][j] + 1;
    for (int x = lo; x <= hi; ++x) {
      if (count[x] >= nu[x - 1]) continue;
      if (x > 1 && count[x] + 1 > count[x - 1]) continue;
      grid[i][j] = x;
      ++count[x];
      rec(i, j - 1);
      --count[x];
    }
  }
};

}  // namespace

long long lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda) {
  if (mu.size() + nu.size() != lambda.size() || !lambda.contains(mu) || !lambda.contains(nu)) return 0;
  if (lambda.size() == 0) return 1;
  LrFill f{lambda, mu, nu, {}, std::vector<int>(nu.length() + 2, 0)};
  f.grid.assign(lambda.length(), std::vector<int>(lambda[0], 0));
  f.rec(0, lambda[0] - 1);
  return f.found;
}

}  // namespace ospo
