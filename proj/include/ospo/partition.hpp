#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace ospo {

class Partition {
 public:
  Partition() = default;
  Partition(std::vector<int> parts);  // validates; trailing zeros dropped
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // 0-based row access, 0 past the end
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }
  Partition conjugate() const;
  bool contains(const Partition& mu) const;
  bool is_hook(int r, int s) const { return (*this)[r] <= s; }
  bool all_even() const;
  std::vector<int> multiplicities() const;  // m[i] = number of parts equal to i

  std::string str() const;  // "(2,1)" and "()" for empty

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

using Frobenius = std::vector<std::pair<int, int>>;  // (arm, leg) along the diagonal
Frobenius frobenius(const Partition& p);
Partition from_frobenius(const Frobenius& f);

std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_up_to(int max);  // by size, then descending
std::vector<Partition> enumerate_rho(int max);     // (a+1 | a) family
std::vector<Partition> enumerate_pi(int max);      // (a-1 | a) family
std::vector<Partition> enumerate_even(int max);    // all parts even

// partitions nu with mu <= nu <= lambda and nu/mu a horizontal (vertical) strip
std::vector<Partition> horizontal_strips_above(const Partition& mu, const Partition& bound);
std::vector<Partition> vertical_strips_above(const Partition& mu, const Partition& bound);

long long z_mu(const Partition& mu);
long long factorial(int n);

}  // namespace ospo
