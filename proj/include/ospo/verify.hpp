#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ospo/rational.hpp"

namespace ospo {

struct SuiteOptions {
  bool small = false;
  std::optional<int> k, r, n, q, degree;
  std::optional<Rat> eta;
  unsigned seed = 1;
};

struct SuiteResult {
  explicit SuiteResult(std::string n = {}) : name(std::move(n)) {}
  std::string name;
  bool passed = true;
  long long checked = 0;
  std::string counterexample;      // first failure, if any
  std::vector<std::string> notes;  // extra lines such as breakdowns
  void fail(const std::string& what) {
    if (passed) counterexample = what;
    passed = false;
  }
  void absorb(const SuiteResult& o);
};

// canonical suite names in run order
const std::vector<std::string>& suite_names();
// canonical name for a suite name or alias, empty if unknown
std::string resolve_suite(const std::string& name);
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace ospo
