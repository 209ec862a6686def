#include "ospo/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstring>
#include <sstream>
#include <stdexcept>

#include "ospo/brauer.hpp"
#include "ospo/characters.hpp"
#include "ospo/insertion.hpp"
#include "ospo/json_io.hpp"
#include "ospo/maximal.hpp"
#include "ospo/psi.hpp"
#include "ospo/spo_algebra.hpp"
#include "ospo/verify.hpp"

namespace ospo {

namespace {

struct Args {
  std::string format = "text";
  int r = -1, n = -1, k = -1, j = 0;
  bool trivial = false, at_one = false, trace = false, circ = false, small = false;
  std::string eta, lambda, mu, method = "lr", diagram, diagram2, word, pattern, tableau, chain, path = "generators";
  std::string suite;
  std::optional<int> q, degree;
  unsigned seed = 1;
};

struct Output {
  Json json;
  std::string text;
};

bool json_mode(const Args& a) { return a.format == "json"; }

void need_module(const Args& a) {
  if (a.r < 0 || a.n < 0) throw std::invalid_argument("--r and --n are required and must be nonnegative");
}

ModuleData module_of(const Args& a) {
  need_module(a);
  return ModuleData::from_rn(a.r, a.n, a.trivial ? Bicharacter::trivial() : Bicharacter::super());
}

Alphabet alphabet_of(const Args& a) {
  need_module(a);
  return Alphabet{a.r, a.n};
}

Rat eta_of(const Args& a) {
  if (a.eta.empty()) throw std::invalid_argument("--eta is required");
  return Rat::parse(a.eta);
}

int k_of(const Args& a) {
  if (a.k < 0) throw std::invalid_argument("--k is required and must be nonnegative");
  return a.k;
}

Json poly_json(const LaurentPoly& p) {
  Json j;
  j["vars"] = *p.vars();
  j["terms"] = to_json(p);
  return j;
}

Json weight_json(const std::vector<int>& w) { return Json(w); }

std::string weight_str(const std::vector<int>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

ContractionPattern parse_pattern(const std::string& text) {
  std::vector<int> nums;
  std::string cur;
  for (char c : text + " ") {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur += c;
    } else {
      if (!cur.empty()) nums.push_back(std::stoi(cur));
      cur.clear();
      if (!std::strchr("()[], ", c)) throw std::invalid_argument("bad character in pattern: " + text);
    }
  }
  if (nums.size() % 2) throw std::invalid_argument("pattern needs pairs of slots");
  ContractionPattern pq;
  for (std::size_t i = 0; i < nums.size(); i += 2) pq.emplace_back(nums[i], nums[i + 1]);
  return pq;
}

StandardTableau parse_standard(const std::string& text) {
  auto j = Json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_array()) throw std::invalid_argument("tableau must be JSON rows like [[1,2],[3]]");
  return StandardTableau(j.get<std::vector<std::vector<int>>>());
}

std::string pattern_str(const ContractionPattern& pq) {
  std::string s;
  for (auto [p, q] : pq) s += "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  return s.empty() ? "()" : s;
}

// brauer -------------------------------------------------------------------

Output brauer_mult(const Args& a) {
  auto d1 = BrauerDiagram::parse(a.diagram);
  auto d2 = BrauerDiagram::parse(a.diagram2);
  auto p = multiply(d1, d2);
  Output o;
  o.json["loops"] = p.loops;
  o.json["diagram"] = p.diagram.str();
  o.json["edges"] = to_json(p.diagram);
  std::ostringstream t;
  t << "loops: " << p.loops << "\nproduct: " << p.diagram.str() << "\n";
  if (!a.eta.empty()) {
    Rat c = eta_of(a).pow(p.loops);
    o.json["coefficient"] = rat_parts(c);
    t << "coefficient: " << c << "\n";
  }
  o.text = t.str();
  return o;
}

Output brauer_unfold(const Args& a) {
  auto d = BrauerDiagram::parse(a.diagram);
  auto f = unfold(d);
  auto img = pi_f(f);
  Output o;
  o.json["onefactor"] = onefactor_str(f);
  o.json["pairs"] = to_json(f);
  o.json["permutation"] = img;
  std::string im;
  for (int x : img) im += (im.empty() ? "" : ",") + std::to_string(x);
  o.text = "onefactor: " + onefactor_str(f) + "\npermutation: (" + im + ")\n";
  return o;
}

Output brauer_factorize(const Args& a) {
  auto d = BrauerDiagram::parse(a.diagram);
  auto w = factorize(d);
  auto back = evaluate_word(d.k(), w);
  bool ok = back.loops == 0 && back.diagram == d;
  if (!ok) throw std::logic_error("factorization does not multiply back to the diagram");
  Output o;
  o.json["word"] = word_str(w);
  o.json["length"] = w.size();
  o.text = "word: " + (w.empty() ? std::string("1") : word_str(w)) + "\n";
  return o;
}

Output brauer_char(const Args& a) {
  auto lam = parse_partition(a.lambda);
  auto mu = parse_partition(a.mu);
  Rat v = brauer_character(lam, a.j, mu, eta_of(a));
  Output o;
  o.json["value"] = rat_parts(v);
  o.text = v.str() + "\n";
  return o;
}

// spo ----------------------------------------------------------------------

Output spo_basis_cmd(const Args& a) {
  auto M = module_of(a);
  auto B = spo_basis(M);
  Output o;
  std::ostringstream t;
  Json basis = Json::array();
  t << "module " << M.describe() << ", dimension " << M.dim() << "\n";
  for (int i = 0; i < M.dim(); ++i) {
    Json e;
    e["token"] = M.token(i);
    e["degree"] = M.degree(i);
    e["weight"] = weight_json(M.weight(i));
    basis.push_back(e);
    t << "  " << M.token(i) << " degree " << M.degree(i) << " weight " << weight_str(M.weight(i)) << "\n";
  }
  auto names = [](const std::vector<SpoMatrix>& xs) {
    std::vector<std::string> v;
    for (const auto& x : xs) v.push_back(x.name);
    return v;
  };
  int dim = static_cast<int>(B.cartan.size() + B.roots.size());
  o.json["module"] = M.describe();
  o.json["basis"] = basis;
  o.json["cartan"] = B.cartan.size();
  o.json["roots"] = B.roots.size();
  o.json["simple"] = names(B.simple);
  o.json["algebra_dimension"] = dim;
  o.json["expected_dimension"] = spo_dimension(M);
  t << "algebra: " << B.cartan.size() << " cartan + " << B.roots.size() << " root vectors = " << dim
    << " (expected " << spo_dimension(M) << ")\nsimple:";
  for (const auto& n : names(B.simple)) t << " " << n;
  t << "\n";
  o.text = t.str();
  return o;
}

Output tensor_output(const TensorVector& v, const ModuleData& M) {
  Output o;
  o.json["vector"] = to_json(v, M);
  o.text = (v.is_zero() ? std::string("0") : v.str(M)) + "\n";
  return o;
}

Output spo_psi(const Args& a) {
  auto M = module_of(a);
  auto d = BrauerDiagram::parse(a.diagram);
  auto w = parse_word(M, a.word);
  if (static_cast<int>(w.size()) != d.k()) throw std::invalid_argument("word length must equal the diagram size");
  auto v = TensorVector::basis(w);
  if (a.path == "generators") return tensor_output(psi_diagram(d, v, M), M);
  if (a.path == "weights") return tensor_output(psi_diagram_weights(d, v, M), M);
  throw std::invalid_argument("--path must be generators or weights");
}

Output spo_phi(const Args& a) {
  auto M = module_of(a);
  return tensor_output(phi_onefactor(parse_onefactor(a.diagram), M), M);
}

Output spo_maximal(const Args& a) {
  auto M = module_of(a);
  int k = k_of(a);
  auto B = spo_basis(M);
  Output o;
  if (!a.tableau.empty() || !a.pattern.empty()) {
    auto pq = parse_pattern(a.pattern);
    StandardTableau T = a.tableau.empty() ? StandardTableau() : parse_standard(a.tableau);
    auto v = maximal_vector(pq, T, a.circ, M, k);
    bool ok = is_maximal(v, M, B);
    auto wt = expected_weight(T.shape(), a.circ, M);
    o.json["seed"] = word_str(M, maximal_seed(pq, T, a.circ, M, k));
    o.json["vector"] = to_json(v, M);
    o.json["maximal"] = ok;
    o.json["weight"] = wt;
    o.text = "seed: " + word_str(M, maximal_seed(pq, T, a.circ, M, k)) + "\nweight: " + weight_str(wt) +
             "\nmaximal: " + (ok ? "yes" : "no") + "\nvector: " + (v.is_zero() ? "0" : v.str(M)) + "\n";
    return o;
  }
  auto fam = maximal_family(k, M);
  Json list = Json::array();
  std::ostringstream t;
  for (const auto& e : fam.entries) {
    bool ok = is_maximal(e.vec, M, B);
    auto wt = expected_weight(e.T.shape(), false, M);
    Json je;
    je["pattern"] = pattern_str(e.pq);
    je["tableau"] = to_json(e.T);
    je["weight"] = wt;
    je["maximal"] = ok;
    je["terms"] = e.vec.size();
    list.push_back(je);
    t << pattern_str(e.pq) << " " << e.T.str() << " weight " << weight_str(wt) << " maximal " << (ok ? "yes" : "no")
      << " terms " << e.vec.size() << "\n";
  }
  o.json["entries"] = list;
  o.json["count"] = fam.count;
  o.json["rank"] = fam.rank;
  t << "count " << fam.count << " rank " << fam.rank << "\n";
  o.text = t.str();
  return o;
}

Output spo_rank(const Args& a) {
  auto M = module_of(a);
  auto fam = maximal_family(k_of(a), M);
  Output o;
  o.json["count"] = fam.count;
  o.json["rank"] = fam.rank;
  o.text = "count " + std::to_string(fam.count) + " rank " + std::to_string(fam.rank) + "\n";
  return o;
}

// char ---------------------------------------------------------------------

Output poly_output(const LaurentPoly& p, const Args& a) {
  Output o;
  if (a.at_one) {
    Rat v = p.at_one();
    o.json["value"] = rat_parts(v);
    o.text = v.str() + "\n";
  } else {
    o.json["polynomial"] = poly_json(p);
    o.text = p.str() + "\n";
  }
  return o;
}

Output char_cmd(const std::string& which, const Args& a) {
  auto M = module_of(a);
  CharacterEngine E(M);
  if (which == "wtr") return poly_output(E.weighted_trace(BrauerDiagram::parse(a.diagram)), a);
  auto lam = parse_partition(a.lambda);
  if (which == "sp") return poly_output(E.sp(lam), a);
  if (which == "sb") return poly_output(E.sb(lam), a);
  if (which == "hook") return poly_output(E.hook(lam), a);
  if (a.method == "all") {
    Output o;
    std::ostringstream t;
    for (ScMethod m : all_sc_methods()) {
      auto p = E.sc(lam, m);
      auto one = poly_output(p, a);
      o.json[method_name(m)] = a.at_one ? one.json["value"] : one.json["polynomial"];
      t << method_name(m) << ": " << one.text;
    }
    o.text = t.str();
    return o;
  }
  auto m = parse_method(a.method);
  if (!m) throw std::invalid_argument("unknown method: " + a.method);
  return poly_output(E.sc(lam, *m), a);
}

// tab ----------------------------------------------------------------------

Json trace_json(const std::vector<Filling>& steps, const Alphabet& A) {
  Json j = Json::array();
  for (const auto& f : steps) j.push_back(to_json(f, A));
  return j;
}

std::string trace_text(const std::vector<Filling>& steps, const Alphabet& A) {
  std::string s;
  for (const auto& f : steps) s += (s.empty() ? "" : " -> ") + filling_str(f, A);
  return s;
}

Output tab_insert(const Args& a) {
  auto A = alphabet_of(a);
  auto w = parse_letter_word(a.word, A);
  std::vector<std::vector<Filling>> tr;
  auto res = insert_word(w, A, a.trace ? &tr : nullptr);
  Output o;
  o.json["tableau"] = to_json(res.T, A);
  o.json["chain"] = to_json(res.chain);
  std::string text;
  if (a.trace) {
    Json steps = Json::array();
    for (std::size_t i = 0; i < tr.size(); ++i) {
      Json s;
      s["letter"] = A.token(w[i]);
      s["steps"] = trace_json(tr[i], A);
      steps.push_back(s);
      text += A.token(w[i]) + ": " + trace_text(tr[i], A) + "\n";
    }
    o.json["trace"] = steps;
  }
  o.text = text + filling_str(res.T, A) + " " + chain_str(res.chain) + "\n";
  return o;
}

Output tab_delete(const Args& a) {
  auto A = alphabet_of(a);
  Filling T = parse_tableau_arg(a.tableau, A);
  UpDownChain chain = parse_chain(a.chain);
  if (!is_spo_tableau(T, A)) throw std::invalid_argument("not an spo tableau: " + filling_str(T, A));
  if (!is_up_down(chain, a.r, a.n)) throw std::invalid_argument("not an up-down chain: " + chain_str(chain));
  std::vector<int> rev;
  std::string text;
  Json steps = Json::array();
  while (chain.size() > 1) {
    std::vector<Filling> tr;
    auto st = delete_last(T, chain, A, a.trace ? &tr : nullptr);
    if (a.trace) {
      Json s;
      s["letter"] = A.token(st.letter);
      s["steps"] = trace_json(tr, A);
      steps.push_back(s);
      text += A.token(st.letter) + ": " + trace_text(tr, A) + "\n";
    }
    rev.push_back(st.letter);
    T = st.T;
    chain = st.chain;
  }
  std::reverse(rev.begin(), rev.end());
  Output o;
  Json toks = Json::array();
  for (int x : rev) toks.push_back(A.token(x));
  o.json["word"] = toks;
  if (a.trace) o.json["trace"] = steps;
  o.text = text + letter_word_str(rev, A) + "\n";
  return o;
}

Output tab_enumerate(const Args& a) {
  auto A = alphabet_of(a);
  auto lam = parse_partition(a.lambda);
  auto all = spo_tableaux(lam, A);
  Output o;
  Json list = Json::array();
  std::string text;
  for (const auto& T : all) {
    list.push_back(to_json(T, A));
    text += filling_str(T, A) + "\n";
  }
  o.json["tableaux"] = list;
  o.json["count"] = all.size();
  o.text = text + "count " + std::to_string(all.size()) + "\n";
  return o;
}

Output tab_count(const Args& a) {
  need_module(a);
  auto c = verify_counting(a.r, a.n, k_of(a));
  Output o;
  Json bd = Json::array();
  std::string text;
  for (auto it = c.breakdown.rbegin(); it != c.breakdown.rend(); ++it) {
    Json e;
    e["shape"] = to_json(it->first);
    e["updown"] = it->second.first;
    e["tableaux"] = it->second.second;
    bd.push_back(e);
    text += it->first.str() + ": " + std::to_string(it->second.first) + " * " + std::to_string(it->second.second) +
            "\n";
  }
  o.json["words"] = c.words;
  o.json["pairs"] = c.pairs;
  o.json["breakdown"] = bd;
  o.json["equal"] = c.passed();
  o.text = text + "words " + std::to_string(c.words) + " pairs " + std::to_string(c.pairs) + "\n";
  return o;
}

// verify -------------------------------------------------------------------

int verify_cmd(const Args& a, std::ostream& out) {
  SuiteOptions so;
  so.small = a.small;
  if (a.k >= 0) so.k = a.k;
  if (a.r >= 0) so.r = a.r;
  if (a.n >= 0) so.n = a.n;
  if (!a.eta.empty()) so.eta = Rat::parse(a.eta);
  so.q = a.q;
  so.degree = a.degree;
  so.seed = a.seed;
  std::vector<std::string> names;
  if (a.suite == "all") {
    names = suite_names();
  } else {
    if (resolve_suite(a.suite).empty()) throw std::invalid_argument("unknown suite: " + a.suite);
    names.push_back(a.suite);
  }
  bool all_ok = true;
  Json results = Json::array();
  for (const auto& n : names) {
    auto r = run_suite(n, so);
    all_ok = all_ok && r.passed;
    if (json_mode(a)) {
      Json j;
      j["suite"] = r.name;
      j["passed"] = r.passed;
      j["checked"] = r.checked;
      if (!r.passed) j["counterexample"] = r.counterexample;
      if (!r.notes.empty()) j["notes"] = r.notes;
      results.push_back(j);
    } else {
      out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " checks)\n";
      for (const auto& note : r.notes) out << "  " << note << "\n";
      if (!r.passed) out << "  counterexample: " << r.counterexample << "\n";
    }
  }
  if (json_mode(a)) {
    Json j;
    j["schema"] = 1;
    j["command"] = "verify";
    j["passed"] = all_ok;
    j["suites"] = results;
    out << j.dump(2) << "\n";
  }
  return all_ok ? 0 : 1;
}

void emit(const Output& o, const std::string& command, const Args& a, std::ostream& out) {
  if (json_mode(a)) {
    Json j;
    j["schema"] = 1;
    j["command"] = command;
    for (const auto& [key, val] : o.json.items()) j[key] = val;
    out << j.dump(2) << "\n";
  } else {
    out << o.text;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Args a;
  CLI::App app{"orthosymplectic tensor toolkit", "ospo"};
  app.require_subcommand(1);
  app.add_option("--format", a.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto module_opts = [&](CLI::App* c) {
    c->add_option("--r", a.r, "number of symplectic pairs, m = 2r")->required();
    c->add_option("--n", a.n, "orthogonal dimension")->required();
    c->add_flag("--trivial", a.trivial, "trivial bicharacter (only n = 0)");
  };

  auto* brauer = app.add_subcommand("brauer", "Brauer diagrams")->require_subcommand(1);
  auto* b_mult = brauer->add_subcommand("mult", "product of two diagrams, first on top");
  b_mult->add_option("first", a.diagram)->required();
  b_mult->add_option("second", a.diagram2)->required();
  b_mult->add_option("--eta", a.eta, "loop value");
  auto* b_unfold = brauer->add_subcommand("unfold", "one-factor of a diagram");
  b_unfold->add_option("diagram", a.diagram)->required();
  auto* b_fact = brauer->add_subcommand("factorize", "word in the generators");
  b_fact->add_option("diagram", a.diagram)->required();
  auto* b_char = brauer->add_subcommand("char", "irreducible character on a class representative");
  b_char->add_option("--lambda", a.lambda)->required();
  b_char->add_option("--j", a.j, "number of horizontal pairs")->default_val(0);
  b_char->add_option("--mu", a.mu, "cycle type of the permutation part")->default_val("");
  b_char->add_option("--eta", a.eta)->required();

  auto* spo = app.add_subcommand("spo", "the module and its symmetry algebra")->require_subcommand(1);
  auto* s_basis = spo->add_subcommand("basis", "module basis and algebra basis");
  module_opts(s_basis);
  auto* s_psi = spo->add_subcommand("psi", "act by a diagram on a basis tensor");
  module_opts(s_psi);
  s_psi->add_option("--diagram", a.diagram)->required();
  s_psi->add_option("word", a.word)->required();
  s_psi->add_option("--path", a.path, "generators or weights");
  auto* s_phi = spo->add_subcommand("phi", "invariant tensor of a one-factor");
  module_opts(s_phi);
  s_phi->add_option("onefactor", a.diagram)->required();
  auto* s_max = spo->add_subcommand("maximal", "maximal vectors");
  module_opts(s_max);
  s_max->add_option("--k", a.k)->required();
  s_max->add_option("--pattern", a.pattern, "contraction pairs, e.g. (1,2)");
  s_max->add_option("--tableau", a.tableau, "standard tableau on the free slots, e.g. [[3,4]]");
  s_max->add_flag("--circ", a.circ, "sign-flipped variant");
  auto* s_rank = spo->add_subcommand("rank", "size and rank of the maximal family");
  module_opts(s_rank);
  s_rank->add_option("--k", a.k)->required();

  auto* chr = app.add_subcommand("char", "character polynomials")->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> char_cmds;
  for (std::string w : {"sc", "sp", "sb", "hook", "wtr"}) {
    auto* c = chr->add_subcommand(w);
    module_opts(c);
    if (w == "wtr")
      c->add_option("--diagram", a.diagram)->required();
    else
      c->add_option("--lambda", a.lambda)->required();
    if (w == "sc") c->add_option("--method", a.method, "lr, lrconj, a..i, tableaux or all");
    c->add_flag("--at-one", a.at_one, "evaluate at z = 1");
    char_cmds.emplace_back(w, c);
  }

  auto* tab = app.add_subcommand("tab", "tableaux and insertion")->require_subcommand(1);
  auto* t_ins = tab->add_subcommand("insert", "insert a word");
  module_opts(t_ins);
  t_ins->add_option("word", a.word)->required();
  t_ins->add_flag("--trace", a.trace);
  auto* t_del = tab->add_subcommand("delete", "recover the word of a pair");
  module_opts(t_del);
  t_del->add_option("--tableau", a.tableau)->required();
  t_del->add_option("--chain", a.chain)->required();
  t_del->add_flag("--trace", a.trace);
  auto* t_enum = tab->add_subcommand("enumerate", "all tableaux of a shape");
  module_opts(t_enum);
  t_enum->add_option("--lambda", a.lambda)->required();
  auto* t_count = tab->add_subcommand("count", "words against pairs");
  module_opts(t_count);
  t_count->add_option("--k", a.k)->required();

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", a.suite, "suite name or all")->required();
  ver->add_flag("--small", a.small, "reduced parameter ranges");
  ver->add_option("--k", a.k);
  ver->add_option("--r", a.r);
  ver->add_option("--n", a.n);
  ver->add_option("--eta", a.eta);
  ver->add_option("--q", a.q);
  ver->add_option("--degree", a.degree);
  ver->add_option("--seed", a.seed);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (ver->parsed()) {
      if (a.r >= 0 && a.n < 0) throw std::invalid_argument("--r needs --n");
      if (a.n >= 0 && a.r < 0) throw std::invalid_argument("--n needs --r");
      return verify_cmd(a, out);
    }
    std::string cmd;
    Output o;
    if (b_mult->parsed()) o = brauer_mult(a), cmd = "brauer mult";
    else if (b_unfold->parsed()) o = brauer_unfold(a), cmd = "brauer unfold";
    else if (b_fact->parsed()) o = brauer_factorize(a), cmd = "brauer factorize";
    else if (b_char->parsed()) o = brauer_char(a), cmd = "brauer char";
    else if (s_basis->parsed()) o = spo_basis_cmd(a), cmd = "spo basis";
    else if (s_psi->parsed()) o = spo_psi(a), cmd = "spo psi";
    else if (s_phi->parsed()) o = spo_phi(a), cmd = "spo phi";
    else if (s_max->parsed()) o = spo_maximal(a), cmd = "spo maximal";
    else if (s_rank->parsed()) o = spo_rank(a), cmd = "spo rank";
    else if (t_ins->parsed()) o = tab_insert(a), cmd = "tab insert";
    else if (t_del->parsed()) o = tab_delete(a), cmd = "tab delete";
    else if (t_enum->parsed()) o = tab_enumerate(a), cmd = "tab enumerate";
    else if (t_count->parsed()) o = tab_count(a), cmd = "tab count";
    else
      for (auto& [w, c] : char_cmds)
        if (c->parsed()) o = char_cmd(w, a), cmd = "char " + w;
    emit(o, cmd, a, out);
    return 0;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace ospo
