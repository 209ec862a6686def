#include "ospo/tensor.hpp"

#include <sstream>
#include <stdexcept>

namespace ospo {

TensorVector TensorVector::basis(const Word& w, const Rat& c) {
  TensorVector v(static_cast<int>(w.size()));
  v.add(w, c);
  return v;
}

Rat TensorVector::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rat(0) : it->second;
}

void TensorVector::add(const Word& w, const Rat& c) {
  if (static_cast<int>(w.size()) != k_) throw std::invalid_argument("tensor length mismatch");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TensorVector::add_scaled(const TensorVector& o, const Rat& c) {
  if (o.k_ != k_) throw std::invalid_argument("tensor length mismatch");
  if (c.is_zero()) return;
  for (auto& [w, v] : o.terms_) add(w, v * c);
}

TensorVector TensorVector::operator+(const TensorVector& o) const {
  TensorVector r = *this;
  r.add_scaled(o, Rat(1));
  return r;
}

TensorVector TensorVector::operator-(const TensorVector& o) const {
  TensorVector r = *this;
  r.add_scaled(o, Rat(-1));
  return r;
}

TensorVector TensorVector::operator*(const Rat& c) const {
  TensorVector r(k_);
  r.add_scaled(*this, c);
  return r;
}

std::string TensorVector::str(const ModuleData& M) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [w, c] : terms_) {
    bool neg = c.sign() < 0;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    Rat a = neg ? -c : c;
    if (!a.is_one()) os << a << '*';
    os << '[' << word_str(M, w) << ']';
  }
  return os.str();
}

Word parse_word(const ModuleData& M, const std::string& text) {
  Word w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) w.push_back(M.index_of(tok));
  return w;
}

std::string word_str(const ModuleData& M, const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + M.token(w[i]);
  return s;
}

std::vector<Word> all_words(int dim, int k) {
  std::vector<Word> out;
  Word w(k, 0);
  while (true) {
    out.push_back(w);
    int i = k - 1;
    while (i >= 0 && w[i] == dim - 1) w[i--] = 0;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

std::vector<int> weight_of(const ModuleData& M, const Word& w) {
  std::vector<int> total(M.r() + M.s(), 0);
  for (int b : w) {
    auto x = M.weight(b);
    for (std::size_t i = 0; i < x.size(); ++i) total[i] += x[i];
  }
  return total;
}

std::map<std::vector<int>, TensorVector> weight_decompose(const ModuleData& M, const TensorVector& v) {
  std::map<std::vector<int>, TensorVector> out;
  for (auto& [w, c] : v.terms()) {
    auto key = weight_of(M, w);
    auto it = out.try_emplace(key, TensorVector(v.k())).first;
    it->second.add(w, c);
  }
  return out;
}

}  // namespace ospo
