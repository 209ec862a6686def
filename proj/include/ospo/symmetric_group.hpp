#pragma once

#include <vector>

#include "ospo/partition.hpp"

namespace ospo {

// Permutations are 0-based one-line arrays: p[i] is the image of i.
using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm compose(const Perm& first, const Perm& then);  // i -> then[first[i]]
Perm inverse(const Perm& p);
int perm_sign(const Perm& p);
Partition cycle_type(const Perm& p);
std::vector<Perm> all_perms(int n);  // lexicographic

// irreducible character of S_k at cycle type mu (border-strip removal)
long long sym_character(const Partition& lambda, const Partition& mu);

long long lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda);

}  // namespace ospo
