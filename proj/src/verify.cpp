#include "ospo/verify.hpp"

#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ospo/brauer.hpp"
#include "ospo/characters.hpp"
#include "ospo/identities.hpp"
#include "ospo/insertion.hpp"
#include "ospo/maximal.hpp"
#include "ospo/psi.hpp"
#include "ospo/spo_algebra.hpp"
#include "ospo/tensor.hpp"

namespace ospo {

void SuiteResult::absorb(const SuiteResult& o) {
  checked += o.checked;
  if (!o.passed) fail(o.name.empty() ? o.counterexample : o.name + ": " + o.counterexample);
  notes.insert(notes.end(), o.notes.begin(), o.notes.end());
}

namespace {

std::string mod_tag(const ModuleData& M) {
  return "r=" + std::to_string(M.r()) + " n=" + std::to_string(M.n());
}

void absorb_identity(SuiteResult& res, const IdentityReport& rep, const std::string& prefix = "") {
  res.checked += rep.checked;
  if (!rep.passed) res.fail(prefix + rep.name + ": " + rep.counterexample);
}

// modules with 1 <= m + n <= total, or the single one given
std::vector<ModuleData> modules_up_to(int total, const SuiteOptions& o) {
  std::vector<ModuleData> out;
  if (o.r && o.n) {
    out.push_back(ModuleData::from_rn(*o.r, *o.n));
    return out;
  }
  for (int r = 0; 2 * r <= total; ++r)
    for (int n = 0; 2 * r + n <= total; ++n)
      if (2 * r + n >= 1) out.push_back(ModuleData::from_rn(r, n));
  return out;
}

std::vector<int> k_range(int lo, int hi, const SuiteOptions& o) {
  if (o.k) return {*o.k};
  std::vector<int> ks;
  for (int k = lo; k <= hi; ++k) ks.push_back(k);
  return ks;
}

SuiteResult suite_presentation(const SuiteOptions& o) {
  SuiteResult res("presentation");
  std::vector<Rat> etas = o.eta ? std::vector<Rat>{*o.eta} : std::vector<Rat>{Rat(-2), Rat(1), Rat(3)};
  for (int k : k_range(2, o.small ? 3 : 4, o))
    for (const auto& eta : etas)
      for (const auto& rel : presentation_check(k, eta)) {
        ++res.checked;
        if (!rel.passed)
          res.fail("k=" + std::to_string(k) + " eta=" + eta.str() + " " + rel.relation + ": " + rel.counterexample);
      }
  return res;
}

SuiteResult suite_psi_agreement(const SuiteOptions& o) {
  SuiteResult res("psi-agreement");
  for (const auto& M : modules_up_to(o.small ? 3 : 5, o))
    for (int k : k_range(1, o.small ? 2 : 3, o))
      for (const auto& d : all_diagrams(k))
        for (const auto& w : all_words(M.dim(), k)) {
          auto v = TensorVector::basis(w);
          auto a = psi_diagram(d, v, M);
          auto b = psi_diagram_weights(d, v, M);
          ++res.checked;
          if (!(a == b))
            res.fail(mod_tag(M) + " d=" + d.str() + " w=" + word_str(M, w) + ": generators give " + a.str(M) +
                     ", weights give " + b.str(M));
        }
  return res;
}

SuiteResult suite_commuting(const SuiteOptions& o) {
  SuiteResult res("commuting");
  std::mt19937 rng(o.seed);
  for (const auto& M : modules_up_to(o.small ? 3 : 5, o)) {
    Rat eta(M.eta());
    auto B = spo_basis(M);
    std::vector<SpoMatrix> xs = B.cartan;
    xs.insert(xs.end(), B.roots.begin(), B.roots.end());
    for (int k : k_range(1, o.small ? 2 : 3, o)) {
      auto ds = all_diagrams(k);
      auto words = all_words(M.dim(), k);
      std::uniform_int_distribution<std::size_t> pick(0, ds.size() - 1);
      for (int trial = 0; trial < (o.small ? 5 : 20); ++trial) {
        const auto& d1 = ds[pick(rng)];
        const auto& d2 = ds[pick(rng)];
        auto prod = multiply(d1, d2);
        for (const auto& w : words) {
          auto v = TensorVector::basis(w);
          auto lhs = psi_diagram(d2, psi_diagram(d1, v, M), M);
          auto rhs = psi_diagram(prod.diagram, v, M) * eta.pow(prod.loops);
          ++res.checked;
          if (!(lhs == rhs))
            res.fail(mod_tag(M) + " product " + d1.str() + "*" + d2.str() + " on " + word_str(M, w));
        }
      }
      for (const auto& x : xs)
        for (int i = 1; i < k; ++i)
          for (char c : {'s', 'e'}) {
            Generator g{c, i};
            for (const auto& w : words) {
              auto v = TensorVector::basis(w);
              auto l = psi_generator(g, act_on_tensor(x, v, M), M);
              auto r = act_on_tensor(x, psi_generator(g, v, M), M);
              ++res.checked;
              if (!(l == r))
                res.fail(mod_tag(M) + " " + x.name + " vs " + std::string(1, c) + std::to_string(i) + " on " +
                         word_str(M, w));
            }
          }
    }
  }
  return res;
}

SuiteResult suite_trace_powersums(const SuiteOptions& o) {
  SuiteResult res("trace-powersums");
  int max_k = o.k ? *o.k : (o.small ? 3 : 4);
  for (const auto& M : modules_up_to(o.small ? 3 : 5, o))
    absorb_identity(res, verify_weighted_trace_powersums(M, max_k), mod_tag(M) + " ");
  return res;
}

std::vector<ModuleData> character_modules(const SuiteOptions& o) {
  std::vector<ModuleData> out;
  if (o.r && o.n) {
    out.push_back(ModuleData::from_rn(*o.r, *o.n));
    return out;
  }
  std::vector<std::pair<int, int>> rs = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}};
  for (auto [r, s] : rs)
    for (bool odd : {false, true}) {
      if (o.small && r + s > 2) continue;
      out.push_back(ModuleData::build(r, s, odd));
    }
  return out;
}

// every method except the tableau sum against the first one
SuiteResult suite_sc_methods(const SuiteOptions& o) {
  SuiteResult res("sc-methods");
  int max = o.degree ? *o.degree : (o.small ? 3 : 4);
  for (const auto& M : character_modules(o)) {
    CharacterEngine E(M);
    for (const auto& lam : partitions_up_to(max)) {
      LaurentPoly ref = E.sc(lam, ScMethod::LR_a);
      for (ScMethod m : all_sc_methods()) {
        if (m == ScMethod::LR_a || m == ScMethod::tableaux_51) continue;
        ++res.checked;
        LaurentPoly v = E.sc(lam, m);
        if (!(v == ref))
          res.fail(mod_tag(M) + " lambda=" + lam.str() + " " + method_name(m) + " gives " + v.str() + ", " +
                   method_name(ScMethod::LR_a) + " gives " + ref.str());
      }
    }
  }
  return res;
}

SuiteResult suite_tableau_formula(const SuiteOptions& o) {
  SuiteResult res("tableau-formula");
  int max = o.degree ? *o.degree : (o.small ? 3 : 4);
  long long bad = 0;
  for (const auto& M : character_modules(o)) {
    CharacterEngine E(M);
    for (const auto& lam : partitions_up_to(max)) {
      LaurentPoly t = E.tableau_sum(lam);
      LaurentPoly h = E.sc(lam, ScMethod::sp_skew_h);
      ++res.checked;
      if (!(t == h)) {
        ++bad;
        res.fail(mod_tag(M) + " lambda=" + lam.str() + " tableaux give " + t.str() + ", " +
                 method_name(ScMethod::sp_skew_h) + " gives " + h.str());
      }
    }
  }
  if (bad) res.notes.push_back("tableau sum differs in " + std::to_string(bad) + " of " +
                               std::to_string(res.checked) + " cases");
  return res;
}

SuiteResult suite_trace_decomposition(const SuiteOptions& o) {
  SuiteResult res("trace-decomposition");
  ModuleData M = ModuleData::from_rn(o.r.value_or(1), o.n.value_or(7));
  for (int k : k_range(2, o.small ? 2 : 3, o)) {
    if (std::abs(M.eta()) <= k)
      throw std::invalid_argument("trace decomposition needs |n-m| > k, got n-m=" + std::to_string(M.eta()) +
                                  " and k=" + std::to_string(k));
    absorb_identity(res, verify_trace_decomposition(M, k), mod_tag(M) + " k=" + std::to_string(k) + " ");
  }
  return res;
}

SuiteResult suite_maximal(const SuiteOptions& o) {
  SuiteResult res("maximal");
  std::vector<ModuleData> mods;
  if (o.r && o.n) {
    mods.push_back(ModuleData::from_rn(*o.r, *o.n));
  } else {
    std::vector<std::pair<int, int>> rn = {{1, 0}, {2, 0}, {3, 0}, {4, 0}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                                           {1, 1}, {1, 2}, {2, 1}, {2, 2}, {1, 3}, {1, 4}};
    for (auto [r, n] : rn) {
      if (o.small && 2 * r + n > 4) continue;
      mods.push_back(ModuleData::from_rn(r, n));
    }
  }
  long long circ = 0;
  for (const auto& M : mods) {
    auto B = spo_basis(M);
    for (int k : k_range(1, o.small ? 3 : 4, o)) {
      if (M.r() + M.s() < k) continue;
      std::string tag = mod_tag(M) + " k=" + std::to_string(k);
      auto fam = maximal_family(k, M);
      auto check = [&](const MaximalEntry& e, bool c) {
        auto v = c ? maximal_vector(e.pq, e.T, true, M, k) : e.vec;
        auto lam = e.T.shape();
        ++res.checked;
        std::string what = tag + " T=" + e.T.str() + (c ? " (sign-flipped variant)" : "");
        if (!is_maximal(v, M, B)) return res.fail(what + " is not a maximal vector");
        auto wd = weight_decompose(M, v);
        if (wd.begin()->first != expected_weight(lam, c, M)) res.fail(what + " has the wrong weight");
      };
      for (const auto& e : fam.entries) {
        check(e, false);
        if (circ_applies(e.T.shape(), M)) {
          check(e, true);
          ++circ;
        }
      }
      ++res.checked;
      if (fam.rank != fam.count)
        res.fail(tag + " family of " + std::to_string(fam.count) + " vectors has rank " + std::to_string(fam.rank));
    }
  }
  res.notes.push_back("sign-flipped variants checked: " + std::to_string(circ));
  return res;
}

std::vector<std::pair<int, int>> alphabets_up_to(int total, const SuiteOptions& o) {
  if (o.r && o.n) return {{*o.r, *o.n}};
  std::vector<std::pair<int, int>> out;
  for (int r = 0; 2 * r <= total; ++r)
    for (int n = 0; 2 * r + n <= total; ++n)
      if (2 * r + n >= 1) out.emplace_back(r, n);
  return out;
}

SuiteResult suite_bijection(const SuiteOptions& o) {
  SuiteResult res("bijection");
  for (auto [r, n] : alphabets_up_to(o.small ? 3 : 4, o))
    for (int k : k_range(0, o.small ? 3 : 4, o)) {
      auto b = verify_bijection(r, n, k);
      res.checked += b.words + b.pairs;
      std::string tag = "r=" + std::to_string(r) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
      if (!b.passed()) {
        bool outside = !(o.r && o.n) && (r == 0 || n == 0);
        res.notes.push_back((outside ? "[outside r,n >= 1] " : "") + tag + ": " + std::to_string(b.word_failures) +
                            " of " + std::to_string(b.words) + " words and " + std::to_string(b.pair_failures) +
                            " of " + std::to_string(b.pairs) + " pairs fail");
        if (!outside) res.fail(tag + ": " + b.first_failure);
      }
    }
  return res;
}

std::string breakdown_str(const CountingReport& c) {
  std::string s;
  for (auto it = c.breakdown.rbegin(); it != c.breakdown.rend(); ++it)
    s += (s.empty() ? "" : ", ") + it->first.str() + ":" + std::to_string(it->second.first) + "*" +
         std::to_string(it->second.second);
  return s;
}

SuiteResult suite_counting(const SuiteOptions& o) {
  SuiteResult res("counting");
  if (!(o.r && o.n)) {
    // the worked case, breakdown ud * spo
    auto c = verify_counting(1, 1, 2);
    std::map<Partition, std::pair<long long, long long>> want = {
        {Partition{2}, {1, 5}}, {Partition{1, 1}, {1, 3}}, {Partition{}, {1, 1}}};
    ++res.checked;
    if (c.words != 9 || c.pairs != 9 || c.breakdown != want)
      res.fail("r=1 n=1 k=2: breakdown " + breakdown_str(c));
  }
  int hi = o.small ? 1 : 2;
  std::vector<std::pair<int, int>> rn;
  if (o.r && o.n)
    rn.emplace_back(*o.r, *o.n);
  else
    for (int r = 0; r <= hi; ++r)
      for (int n = 0; n <= hi; ++n)
        if (r + n) rn.emplace_back(r, n);
  for (auto [r, n] : rn)
    for (int k : k_range(0, o.small ? 3 : 4, o)) {
      auto c = verify_counting(r, n, k);
      ++res.checked;
      if (!c.passed()) {
        std::string tag = "r=" + std::to_string(r) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
        std::string msg = tag + ": words " + std::to_string(c.words) + ", pairs " + std::to_string(c.pairs) +
                          " [" + breakdown_str(c) + "]";
        // the identity is stated for positive r and n; zero cases are reported only
        bool outside = !(o.r && o.n) && (r == 0 || n == 0);
        res.notes.push_back(outside ? "[outside r,n >= 1] " + msg : msg);
        if (!outside) res.fail(msg);
      }
    }
  return res;
}

SuiteResult suite_littlewood(const SuiteOptions& o) {
  SuiteResult res("littlewood");
  int qmax = o.q ? *o.q : (o.small ? 2 : 3);
  int D = o.degree ? *o.degree : (o.small ? 4 : 6);
  for (int q = 1; q <= qmax; ++q) {
    std::string tag = "q=" + std::to_string(q) + " D=" + std::to_string(D) + " ";
    absorb_identity(res, verify_littlewood_rho(q, D), tag);
    absorb_identity(res, verify_littlewood_pi(q, D), tag);
    absorb_identity(res, verify_littlewood_even(q, D), tag);
  }
  return res;
}

SuiteResult suite_lr_inverse(const SuiteOptions& o) {
  SuiteResult res("lr-inverse");
  absorb_identity(res, verify_lr_inverse(o.degree ? *o.degree : (o.small ? 4 : 6)));
  return res;
}

SuiteResult suite_cauchy(const SuiteOptions& o) {
  SuiteResult res("cauchy");
  int q = o.q ? *o.q : (o.small ? 2 : 3);
  int D = o.degree ? *o.degree : (o.small ? 4 : 6);
  std::vector<ModuleData> mods;
  if (o.r && o.n)
    mods.push_back(ModuleData::from_rn(*o.r, *o.n));
  else
    for (auto [r, n] : std::vector<std::pair<int, int>>{{1, 0}, {0, 2}, {1, 1}, {0, 3}, {1, 2}})
      mods.push_back(ModuleData::from_rn(r, n));
  for (const auto& M : mods)
    for (bool conj : {false, true}) absorb_identity(res, verify_cauchy(M, q, D, conj), mod_tag(M) + " ");
  return res;
}

SuiteResult suite_mn_characters(const SuiteOptions& o) {
  SuiteResult res("mn-characters");
  absorb_identity(res, verify_character_table(o.k ? *o.k : (o.small ? 4 : 5)));
  return res;
}

SuiteResult suite_hook_powersums(const SuiteOptions& o) {
  SuiteResult res("hook-powersums");
  int max = o.degree ? *o.degree : (o.small ? 3 : 4);
  for (const auto& M : character_modules(o)) absorb_identity(res, verify_hook_powersums(M, max), mod_tag(M) + " ");
  return res;
}

SuiteResult suite_examples(const SuiteOptions&) {
  SuiteResult res("examples");
  auto expect = [&](const std::string& what, const std::string& got, const std::string& want) {
    ++res.checked;
    if (got != want) res.fail(what + ": got " + got + ", expected " + want);
  };
  auto d = BrauerDiagram::parse("((1,4')(2,1')(3,5)(4,6')(6,5')(2',3'))");
  auto f = unfold(d);
  expect("unfold", onefactor_str(f), "((1,11)(2,3)(4,12)(5,7)(6,9)(8,10))");
  std::string img;
  for (int x : pi_f(f)) img += (img.empty() ? "" : ",") + std::to_string(x);
  expect("one-factor permutation", "(" + img + ")", "(1,2,4,5,6,8,10,9,7,12,3,11)");
  expect("fold", fold(f).str(), d.str());

  Alphabet A{4, 4};
  auto w = parse_letter_word("v2 t2 t1* t1 v3 t1", A);
  auto ins = insert_word(w, A);
  expect("insertion tableau", filling_str(ins.T, A), "[[t1,v2],[t2,v3]]");
  expect("insertion shapes", chain_str(ins.chain), "((),(1),(2),(2,1),(2),(2,1),(2,2))");
  expect("deletion", letter_word_str(delete_word(ins.T, ins.chain, A), A), "v2 t2 t1* t1 v3 t1");

  auto J = parse_filling("[[t1*,t2,t2],[_,t3,v2],[t3,v1,v2],[v2]]", A);
  std::vector<Filling> trace;
  auto Jf = jeu(J, A, &trace);
  expect("slide steps", std::to_string(trace.size()), "3");
  expect("slide result", filling_str(Jf, A), "[[t1*,t2,t2],[t3,t3,v2],[v1,v2,_],[v2]]");
  expect("reverse slide", filling_str(injeu(Jf, A), A), filling_str(J, A));
  return res;
}

using Runner = SuiteResult (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> r = {
      {"presentation", suite_presentation},
      {"psi-agreement", suite_psi_agreement},
      {"commuting", suite_commuting},
      {"trace-powersums", suite_trace_powersums},
      {"sc-methods", suite_sc_methods},
      {"tableau-formula", suite_tableau_formula},
      {"trace-decomposition", suite_trace_decomposition},
      {"maximal", suite_maximal},
      {"bijection", suite_bijection},
      {"counting", suite_counting},
      {"littlewood", suite_littlewood},
      {"lr-inverse", suite_lr_inverse},
      {"cauchy", suite_cauchy},
      {"mn-characters", suite_mn_characters},
      {"hook-powersums", suite_hook_powersums},
      {"examples", suite_examples},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, f] : registry()) v.push_back(n);
    return v;
  }();
  return names;
}

std::string resolve_suite(const std::string& name) {
  // short names used by the published command-line contract
  static const std::map<std::string, std::string> aliases = {
      {"lemma4.8", "trace-powersums"}, {"thm4.24", "sc-methods"},   {"thm4.25", "trace-decomposition"},
      {"thm5.1", "tableau-formula"},   {"thm5.5", "bijection"},     {"cor5.6", "counting"},
      {"prop4.15", "lr-inverse"},      {"homomorphism", "commuting"}, {"dual-psi", "psi-agreement"},
  };
  for (const auto& n : suite_names())
    if (n == name) return n;
  auto it = aliases.find(name);
  return it == aliases.end() ? std::string() : it->second;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  std::string canon = resolve_suite(name);
  for (const auto& [n, f] : registry())
    if (n == canon) {
      SuiteResult r = f(opts);
      r.name = n;
      return r;
    }
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace ospo
