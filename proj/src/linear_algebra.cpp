#include "ospo/linear_algebra.hpp"

#include <map>
#include <stdexcept>

namespace ospo {

namespace {

// echelon basis keyed by leading (smallest) word, rows scaled to lead 1
struct Echelon {
  std::map<Word, TensorVector> rows;

  // reduce v in place; returns true if it became zero
  bool reduce(TensorVector& v, TensorVector* tag = nullptr, const std::map<Word, TensorVector>* tags = nullptr) {
    while (!v.is_zero()) {
      bool progressed = false;
      for (auto& [w, c] : v.terms()) {
        auto it = rows.find(w);
        if (it == rows.end()) continue;
        Rat f = -c;
        if (tag) tag->add_scaled(tags->at(w), f);
        v.add_scaled(it->second, f);
        progressed = true;
        break;
      }
      if (!progressed) return false;
    }
    return true;
  }
};

}  // namespace

int rank(const std::vector<TensorVector>& vectors) {
  Echelon e;
  int r = 0;
  for (auto v : vectors) {
    if (e.reduce(v)) continue;
    auto lead = v.terms().begin()->first;
    Rat inv = v.terms().begin()->second.inverse();
    e.rows.emplace(lead, v * inv);
    ++r;
  }
  return r;
}

bool in_span(const std::vector<TensorVector>& family, const TensorVector& v) {
  Echelon e;
  for (auto x : family) {
    if (e.reduce(x)) continue;
    auto lead = x.terms().begin()->first;
    Rat inv = x.terms().begin()->second.inverse();
    e.rows.emplace(lead, x * inv);
  }
  TensorVector y = v;
  return e.reduce(y);
}

std::vector<TensorVector> kernel(const std::vector<Word>& domain, const std::vector<TensorVector>& images) {
  if (domain.size() != images.size()) throw std::invalid_argument("domain and image lists differ in length");
  Echelon e;
  std::map<Word, TensorVector> tags;
  std::vector<TensorVector> out;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    TensorVector v = images[i];
    TensorVector tag = TensorVector::basis(domain[i]);
    if (e.reduce(v, &tag, &tags)) {
      out.push_back(tag);
      continue;
    }
    auto lead = v.terms().begin()->first;
    Rat inv = v.terms().begin()->second.inverse();
    e.rows.emplace(lead, v * inv);
    tags.emplace(lead, tag * inv);
  }
  return out;
}

}  // namespace ospo
