#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ospo/module.hpp"

namespace ospo {

struct IdentityReport {
  explicit IdentityReport(std::string n = {}) : name(std::move(n)) {}
  std::string name;
  bool passed = true;
  long long checked = 0;
  std::string counterexample;  // first failure
  void fail(const std::string& what) {
    if (passed) counterexample = what;
    passed = false;
  }
};

// products over y_1..y_q against signed Schur sums, truncated at total degree D
IdentityReport verify_littlewood_rho(int q, int degree);    // prod_{i<=j}(1-y_i y_j)
IdentityReport verify_littlewood_pi(int q, int degree);     // prod_{i<j}(1-y_i y_j)
IdentityReport verify_littlewood_even(int q, int degree);   // prod_{i<=j}(1-y_i y_j)^{-1}
IdentityReport verify_lr_inverse(int max_size);             // signed rho sums invert even-theta sums
IdentityReport verify_cauchy(const ModuleData& M, int q, int degree, bool conjugate);
// wtr(e^j (x) gamma_mu) = (n-m)^j pbar_mu for all k <= max_k
IdentityReport verify_weighted_trace_powersums(const ModuleData& M, int max_k);
// wtr = sum over lambda of Brauer character at lambda' times sc_lambda; needs |n-m| > k
IdentityReport verify_trace_decomposition(const ModuleData& M, int k);
// Murnaghan-Nakayama against the power-sum expansion in k variables
IdentityReport verify_character_table(int max_k);
// expansions of hook Schur functions in power sums, plain and barred
IdentityReport verify_hook_powersums(const ModuleData& M, int max_size);

}  // namespace ospo
