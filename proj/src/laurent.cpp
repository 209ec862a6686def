#include "ospo/laurent.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ospo {

std::shared_ptr<const VarNames> LaurentPoly::empty_vars() {
  static const auto none = std::make_shared<const VarNames>();
  return none;
}

std::shared_ptr<const VarNames> LaurentPoly::make_vars(VarNames names) {
  return std::make_shared<const VarNames>(std::move(names));
}

LaurentPoly::LaurentPoly(const Rat& c) : vars_(empty_vars()) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

LaurentPoly::LaurentPoly(std::shared_ptr<const VarNames> vars, const Rat& c)
    : vars_(vars ? std::move(vars) : empty_vars()) {
  if (!c.is_zero()) terms_.emplace(Exponents(vars_->size(), 0), c);
}

LaurentPoly LaurentPoly::variable(std::shared_ptr<const VarNames> vars, int index, int power) {
  if (index < 0 || index >= static_cast<int>(vars->size()))
    throw std::out_of_range("variable index out of range");
  Exponents e(vars->size(), 0);
  e[index] = power;
  return monomial(std::move(vars), e);
}

LaurentPoly LaurentPoly::monomial(std::shared_ptr<const VarNames> vars, const Exponents& e,
                                  const Rat& c) {
  LaurentPoly p(std::move(vars));
  if (e.size() != p.nvars()) throw std::invalid_argument("exponent length mismatch");
  if (!c.is_zero()) p.terms_.emplace(e, c);
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (int x : terms_.begin()->first)
    if (x) return false;
  return true;
}

Rat LaurentPoly::constant_term() const { return coefficient(Exponents(nvars(), 0)); }

Rat LaurentPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

// bring both operands onto the same variable list
void LaurentPoly::unify(const LaurentPoly& o) {
  if (vars_ == o.vars_ || *vars_ == *o.vars_) return;
  if (vars_->empty()) {
    TermMap t;
    for (auto& [e, c] : terms_) t.emplace(Exponents(o.nvars(), 0), c);
    terms_ = std::move(t);
    vars_ = o.vars_;
    return;
  }
  if (o.vars_->empty()) return;
  throw std::invalid_argument("variable-list mismatch");
}

static const LaurentPoly& lift(const LaurentPoly& o, const LaurentPoly& like, LaurentPoly& tmp) {
  if (o.nvars() == like.nvars()) return o;
  // o is a scalar
  tmp = LaurentPoly(like.vars(), o.constant_term());
  return tmp;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

void LaurentPoly::add_term(const Exponents& e, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  add_scaled(o, Rat(1));
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  add_scaled(o, Rat(-1));
  return *this;
}

void LaurentPoly::add_scaled(const LaurentPoly& b, const Rat& c) {
  if (c.is_zero() || b.is_zero()) return;
  unify(b);
  LaurentPoly tmp;
  const LaurentPoly& bb = lift(b, *this, tmp);
  for (auto& [e, v] : bb.terms_) add_term(e, v * c);
}

void LaurentPoly::add_term_times(const Exponents& e, const Rat& c, const LaurentPoly& b) {
  if (c.is_zero() || b.is_zero()) return;
  unify(b);
  LaurentPoly tmp;
  const LaurentPoly& bb = lift(b, *this, tmp);
  Exponents f(e.size());
  for (auto& [be, bv] : bb.terms_) {
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = e[i] + be[i];
    add_term(f, bv * c);
  }
}

LaurentPoly& LaurentPoly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r(a.nvars() >= b.nvars() ? a.vars_ : b.vars_);
  if (a.nvars() && b.nvars() && a.vars_ != b.vars_ && *a.vars_ != *b.vars_)
    throw std::invalid_argument("variable-list mismatch");
  if (a.is_zero() || b.is_zero()) return r;
  LaurentPoly ta, tb;
  const LaurentPoly& aa = lift(a, r, ta);
  const LaurentPoly& bb = lift(b, r, tb);
  for (auto& [e, c] : aa.terms_) r.add_term_times(e, c, bb);
  return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() == b.nvars()) {
    if (a.nvars() && a.vars_ != b.vars_ && *a.vars_ != *b.vars_) return false;
    return a.terms_ == b.terms_;
  }
  // one side is a scalar
  const LaurentPoly& s = a.nvars() ? b : a;
  const LaurentPoly& p = a.nvars() ? a : b;
  return p.is_constant() && p.constant_term() == s.constant_term();
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) {
    if (!is_monomial()) throw std::domain_error("negative power of a non-monomial");
    auto& [ex, c] = *terms_.begin();
    Exponents ne(ex.size());
    for (std::size_t i = 0; i < ex.size(); ++i) ne[i] = -ex[i];
    return monomial(vars_, ne, c.inverse()).pow(-e);
  }
  LaurentPoly out(vars_, Rat(1)), base = *this;
  while (e) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return out;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& b) const {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  LaurentPoly rem = *this;
  rem.unify(b);
  LaurentPoly tmp;
  const LaurentPoly& d = lift(b, rem, tmp);
  LaurentPoly q(rem.vars_);
  if (rem.is_zero()) return q;
  auto [dlead, dcoef] = *d.terms_.begin();
  const Exponents& dlow = d.terms_.rbegin()->first;
  Exponents qlow = rem.terms_.rbegin()->first;
  for (std::size_t i = 0; i < qlow.size(); ++i) qlow[i] -= dlow[i];
  Exponents t(dlead.size());
  while (!rem.is_zero()) {
    auto& [rl, rc] = *rem.terms_.begin();
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = rl[i] - dlead[i];
    // the quotient can't have terms below the ratio of lowest terms
    if (t < qlow) throw std::domain_error("polynomial division is not exact");
    Rat c = rc / dcoef;
    q.add_term(t, c);
    rem.add_term_times(t, -c, d);
  }
  return q;
}

LaurentPoly LaurentPoly::substitute(int i, const LaurentPoly& value) const {
  if (i < 0 || i >= static_cast<int>(nvars())) throw std::out_of_range("variable index");
  LaurentPoly r(vars_);
  LaurentPoly tmp;
  const LaurentPoly& v = lift(value, r, tmp);
  if (v.nvars() != nvars()) throw std::invalid_argument("variable-list mismatch");
  std::map<int, LaurentPoly> powers;
  for (auto& [e, c] : terms_) {
    int k = e[i];
    auto it = powers.find(k);
    if (it == powers.end()) it = powers.emplace(k, v.pow(k)).first;
    Exponents f = e;
    f[i] = 0;
    r.add_term_times(f, c, it->second);
  }
  return r;
}

LaurentPoly LaurentPoly::invert_variable(int i) const {
  LaurentPoly r(vars_);
  for (auto& [e, c] : terms_) {
    Exponents f = e;
    f[i] = -f[i];
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

Rat LaurentPoly::evaluate(const std::vector<Rat>& point) const {
  if (point.size() != nvars()) throw std::invalid_argument("evaluation point has wrong length");
  Rat total(0);
  for (auto& [e, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (point[i].is_zero() && e[i] < 0) throw std::domain_error("negative power of zero");
      t *= point[i].pow(e[i]);
    }
    total += t;
  }
  return total;
}

Rat LaurentPoly::at_one() const {
  Rat total(0);
  for (auto& [e, c] : terms_) total += c;
  return total;
}

LaurentPoly LaurentPoly::rebase(std::shared_ptr<const VarNames> vars) const {
  std::vector<int> where(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) {
    int found = -1;
    for (std::size_t j = 0; j < vars->size(); ++j)
      if ((*vars)[j] == (*vars_)[i]) found = static_cast<int>(j);
    if (found < 0) throw std::invalid_argument("variable '" + (*vars_)[i] + "' missing");
    where[i] = found;
  }
  LaurentPoly r(vars);
  for (auto& [e, c] : terms_) {
    Exponents f(vars->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[where[i]] = e[i];
    r.add_term(f, c);
  }
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += '*';
      mono += (*vars_)[i];
      if (e[i] != 1) mono += '^' + std::to_string(e[i]);
    }
    bool neg = c.sign() < 0;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    Rat a = neg ? -c : c;
    if (mono.empty())
      os << a;
    else if (a.is_one())
      os << mono;
    else
      os << a << '*' << mono;
  }
  return os.str();
}

namespace {

struct Parser {
  std::string_view s;
  std::size_t i = 0;
  const VarNames& names;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("cannot parse polynomial at offset " + std::to_string(i) + ": " + what);
  }
  bool digit() { return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); }
  std::string integer() {
    std::size_t st = i;
    while (digit()) ++i;
    if (st == i) fail("expected digits");
    return std::string(s.substr(st, i - st));
  }
  int var_index() {
    std::size_t st = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    std::string name(s.substr(st, i - st));
    if (name.empty()) fail("expected variable");
    for (std::size_t k = 0; k < names.size(); ++k)
      if (names[k] == name) return static_cast<int>(k);
    fail("unknown variable '" + name + "'");
  }
  void term(int sign, LaurentPoly& out) {
    skip();
    Rat c(sign);
    Exponents e(names.size(), 0);
    bool need_factor = true;
    if (digit()) {
      std::string num = integer(), den = "1";
      if (i < s.size() && s[i] == '/') {
        ++i;
        den = integer();
      }
      c *= Rat::from_parts(num, den);
      skip();
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip();
      } else {
        need_factor = false;
      }
    }
    while (need_factor) {
      int v = var_index();
      int p = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        bool neg = false;
        if (i < s.size() && s[i] == '-') {
          neg = true;
          ++i;
        }
        p = std::stoi(integer());
        if (neg) p = -p;
      }
      e[v] += p;
      skip();
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip();
      } else {
        need_factor = false;
      }
    }
    out.add_term(e, c);
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, std::shared_ptr<const VarNames> vars) {
  LaurentPoly out(vars);
  Parser p{text, 0, *out.vars_};
  p.skip();
  int sign = 1;
  if (p.i < text.size() && (text[p.i] == '-' || text[p.i] == '+')) {
    sign = text[p.i] == '-' ? -1 : 1;
    ++p.i;
  }
  p.term(sign, out);
  for (p.skip(); p.i < text.size(); p.skip()) {
    char op = text[p.i];
    if (op != '+' && op != '-') p.fail("expected + or -");
    ++p.i;
    p.term(op == '-' ? -1 : 1, out);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

}  // namespace ospo
