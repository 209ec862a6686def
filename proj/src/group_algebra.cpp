#include "ospo/group_algebra.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "ospo/brauer.hpp"
#include "ospo/psi.hpp"

namespace ospo {

GroupAlgebraElement GroupAlgebraElement::unit(int k) {
  GroupAlgebraElement e(k);
  e.add(identity_perm(k), Rat(1));
  return e;
}

void GroupAlgebraElement::add(const Perm& p, const Rat& c) {
  if (static_cast<int>(p.size()) != k_) throw std::invalid_argument("permutation size mismatch");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(p, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
  if (o.k_ != k_) throw std::invalid_argument("group algebra size mismatch");
  GroupAlgebraElement r(k_);
  for (auto& [p, a] : terms_)
    for (auto& [q, b] : o.terms_) r.add(compose(p, q), a * b);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const Rat& c) const {
  GroupAlgebraElement r(k_);
  for (auto& [p, a] : terms_) r.add(p, a * c);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
  GroupAlgebraElement r = *this;
  for (auto& [p, a] : o.terms_) r.add(p, a);
  return r;
}

std::string GroupAlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [p, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += c.str() + "*[";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i] + 1);
    s += "]";
  }
  return s;
}

// all permutations of 0..k-1 that preserve each block setwise
static std::vector<Perm> block_group(const std::vector<std::vector<int>>& blocks, int k) {
  std::vector<Perm> out{identity_perm(k)};
  for (auto& blk : blocks) {
    std::vector<Perm> next;
    std::vector<int> img = blk;
    std::sort(img.begin(), img.end());
    do {
      for (auto& p : out) {
        Perm q = p;
        for (std::size_t i = 0; i < blk.size(); ++i) q[blk[i] - 1] = img[i] - 1;
        next.push_back(q);
      }
    } while (std::next_permutation(img.begin(), img.end()));
    out = std::move(next);
  }
  return out;
}

YoungSymmetrizer young_symmetrizer(const StandardTableau& T, int k) {
  for (int x : T.reading_word())
    if (x < 1 || x > k) throw std::invalid_argument("tableau label outside 1..k");
  GroupAlgebraElement rows(k), cols(k);
  for (auto& p : block_group(T.rows(), k)) rows.add(p, Rat(perm_sign(p)));
  for (auto& p : block_group(T.columns(), k)) cols.add(p, Rat(1));
  YoungSymmetrizer y{rows * cols, Rat(0), GroupAlgebraElement(k)};
  GroupAlgebraElement sq = y.s * y.s;
  // s*s = h s: read h off the identity coefficient ratio
  const Perm id = identity_perm(k);
  Rat s_id = y.s.terms().count(id) ? y.s.terms().at(id) : Rat(0);
  if (s_id.is_zero()) throw std::logic_error("young symmetrizer has no identity term");
  Rat sq_id = sq.terms().count(id) ? sq.terms().at(id) : Rat(0);
  y.h = sq_id / s_id;
  if (!(sq == y.s * y.h)) throw std::logic_error("s_T^2 is not proportional to s_T");
  y.y = y.s * y.h.inverse();
  return y;
}

TensorVector act_group_algebra(const GroupAlgebraElement& g, const TensorVector& w, const ModuleData& M) {
  if (g.k() != w.k()) throw std::invalid_argument("group algebra and tensor lengths differ");
  TensorVector out(w.k());
  for (auto& [p, c] : g.terms()) out.add_scaled(psi_diagram_weights(BrauerDiagram::from_perm(p), w, M), c);
  return out;
}

}  // namespace ospo
