#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "ospo/brauer.hpp"
#include "ospo/laurent.hpp"
#include "ospo/module.hpp"
#include "ospo/partition.hpp"
#include "ospo/series.hpp"

namespace ospo {

// z_b for each basis element: z_{b*} = 1/z_b, z_{u_{s+1}} = 1
struct VariableMap {
  std::shared_ptr<const VarNames> vars;
  std::vector<LaurentPoly> z;  // indexed by basis index
  std::vector<int> even;       // symplectic basis indices, in order
  std::vector<int> odd;        // orthogonal basis indices, in order
  static VariableMap of(const ModuleData& M);
  LaurentPoly zero() const { return LaurentPoly(vars, Rat(0)); }
  LaurentPoly one() const { return LaurentPoly(vars, Rat(1)); }
};

// Sum over chains of strips: each letter in turn adds a horizontal strip (row
// limited to max_row, 0 = unlimited) or a vertical strip; weight z^{boxes}.
struct StripLetter {
  LaurentPoly z;
  bool vertical = false;
  int max_row = 0;
};
LaurentPoly strip_sum(const Partition& from, const Partition& to, const std::vector<StripLetter>& letters,
                      const LaurentPoly& zero);

LaurentPoly skew_schur(const Partition& lambda, const Partition& mu, const std::vector<LaurentPoly>& vars,
                       const LaurentPoly& zero);
LaurentPoly hook_schur(const Partition& lambda, const VariableMap& V);
LaurentPoly sp_schur(const Partition& lambda, const VariableMap& V);
LaurentPoly p_bar(const Partition& mu, const VariableMap& V);
LaurentPoly p_hook(const Partition& mu, const VariableMap& V);  // hook power sums

// Schur polynomial s_lambda(y_1..y_q) as a truncated series
TruncSeries schur_series(const Partition& lambda, int q, int degree, std::shared_ptr<const VarNames> zvars);

std::vector<Partition> subpartitions(const Partition& lambda);

enum class ScMethod { LR_a, LRconj_b, gen_c, gen_d, hdet_e, edet_f, edet_g, sp_skew_h, sb_skew_i, tableaux_51 };
const std::vector<ScMethod>& all_sc_methods();
std::string method_name(ScMethod m);
std::optional<ScMethod> parse_method(std::string_view name);

int default_trunc_degree(const Partition& lambda);  // |lambda| unless OSPO_TRUNC_DEGREE is larger

// Memoizing evaluator for one module. Not thread-safe; use one per thread.
class CharacterEngine {
 public:
  explicit CharacterEngine(const ModuleData& M);
  const ModuleData& module() const { return M_; }
  const VariableMap& vars() const { return V_; }

  LaurentPoly hook(const Partition& lambda);
  LaurentPoly h(int l);  // complete hook function
  LaurentPoly e(int l);  // elementary hook function
  LaurentPoly sp(const Partition& lambda);
  // coefficient of s_lambda in the symplectic resp. orthogonal generating series; q chosen and stability checked
  LaurentPoly sc_even(const Partition& lambda);
  LaurentPoly sb(const Partition& lambda);
  LaurentPoly sc(const Partition& lambda, ScMethod method);
  LaurentPoly tableau_sum(const Partition& lambda);

  LaurentPoly weighted_trace(const BrauerDiagram& d);

  // generating series, which = 'c','d','0' (symplectic
  // part only), '1' (orthogonal part only)
  TruncSeries generating_series(char which, int q, int degree) const;

 private:
  LaurentPoly series_coefficient(char which, const Partition& lambda);
  LaurentPoly lr_signed(const Partition& lambda, bool conjugate);
  LaurentPoly det_h(const Partition& lambda);
  LaurentPoly det_e_half(const Partition& lambda);
  LaurentPoly det_e(const Partition& lambda);

  ModuleData M_;
  VariableMap V_;
  std::map<Partition, LaurentPoly> hook_cache_, sp_cache_, sc0_cache_, sb_cache_;
  std::map<std::pair<char, Partition>, LaurentPoly> series_cache_;
  std::map<std::tuple<char, int, int>, TruncSeries> gen_cache_;
};

LaurentPoly sc_lambda(const Partition& lambda, const ModuleData& M, ScMethod method);
LaurentPoly weighted_trace(const BrauerDiagram& d, const ModuleData& M);

}  // namespace ospo
