#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ospo/partition.hpp"
#include "ospo/rational.hpp"
#include "ospo/symmetric_group.hpp"

namespace ospo {

// Perfect matching on k top vertices and k bottom vertices. Internally
// vertex v < k is top v+1, vertex k+v is bottom (v+1)'.
class BrauerDiagram {
 public:
  BrauerDiagram() = default;
  static BrauerDiagram identity(int k);
  // signed 1-based vertices: positive top, negative bottom
  static BrauerDiagram from_edges(int k, const std::vector<std::pair<int, int>>& edges);
  static BrauerDiagram from_perm(const Perm& p);  // top i -> bottom p[i]
  static BrauerDiagram parse(std::string_view text);  // ((1,4')(2,1')...)

  int k() const { return k_; }
  int partner(int v) const { return partner_[v]; }
  const std::vector<int>& partners() const { return partner_; }
  std::vector<std::pair<int, int>> edges() const;  // canonical signed edge list
  bool is_permutation() const;
  Perm permutation() const;
  int horizontal_top_count() const;
  std::string str() const;

  friend auto operator<=>(const BrauerDiagram&, const BrauerDiagram&) = default;
  friend bool operator==(const BrauerDiagram&, const BrauerDiagram&) = default;

 private:
  int k_ = 0;
  std::vector<int> partner_;
};

struct DiagramProduct {
  int loops;
  BrauerDiagram diagram;
};

// d1 stacked above d2
DiagramProduct multiply(const BrauerDiagram& d1, const BrauerDiagram& d2);

// pairs (l_i, r_i) on 1..2k, l_i < r_i, sorted by l
using OneFactor = std::vector<std::pair<int, int>>;
OneFactor unfold(const BrauerDiagram& d);
BrauerDiagram fold(const OneFactor& f);
std::string onefactor_str(const OneFactor& f);
OneFactor parse_onefactor(std::string_view text);
std::vector<int> pi_f(const OneFactor& f);  // 1-based images
std::vector<OneFactor> all_onefactors(int twok);
std::vector<BrauerDiagram> all_diagrams(int k);

// generator word letters
struct Generator {
  char kind;  // 's' or 'e'
  int index;  // 1-based, acts on strands index, index+1
  friend bool operator==(const Generator&, const Generator&) = default;
};
using GeneratorWord = std::vector<Generator>;
std::string word_str(const GeneratorWord& w);
GeneratorWord parse_word(std::string_view text);

BrauerDiagram gen_s(int k, int i);
BrauerDiagram gen_e(int k, int i);
BrauerDiagram gamma(int m);  // cycle 1->2->...->m->1 on strands
BrauerDiagram gamma_mu(const Partition& mu);
BrauerDiagram e_pow_gamma(int j, const Partition& mu);
BrauerDiagram tensor(const BrauerDiagram& left, const BrauerDiagram& right);
BrauerDiagram contraction(int k, int p, int q);  // top (p,q), bottom (p',q'), 1-based

// adjacent-transposition word for a permutation diagram
GeneratorWord permutation_word(const Perm& p);
GeneratorWord factorize(const BrauerDiagram& d);
DiagramProduct evaluate_word(int k, const GeneratorWord& w);

// Linear combinations in B_k(eta)
class AlgebraElement {
 public:
  AlgebraElement(int k, Rat eta) : k_(k), eta_(std::move(eta)) {}
  static AlgebraElement basis(const BrauerDiagram& d, Rat eta, Rat coef = Rat(1));

  int k() const { return k_; }
  const Rat& eta() const { return eta_; }
  const std::map<BrauerDiagram, Rat>& terms() const { return terms_; }
  void add(const BrauerDiagram& d, const Rat& c);

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator*(const AlgebraElement& o) const;
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.k_ == b.k_ && a.eta_ == b.eta_ && a.terms_ == b.terms_;
  }
  std::string str() const;

 private:
  int k_;
  Rat eta_;
  std::map<BrauerDiagram, Rat> terms_;
};

struct RelationResult {
  std::string relation;
  bool passed;
  std::string counterexample;
};
std::vector<RelationResult> presentation_check(int k, const Rat& eta);

Rat brauer_character(const Partition& lambda, int j, const Partition& mu, const Rat& eta);

}  // namespace ospo
