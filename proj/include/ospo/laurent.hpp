#pragma once

#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ospo/rational.hpp"

namespace ospo {

using Exponents = std::vector<int>;
using VarNames = std::vector<std::string>;

// Multivariate Laurent polynomial over Q. A polynomial with an empty
// variable list is a plain scalar and mixes freely with any other.
class LaurentPoly {
 public:
  // terms are kept sorted descending lexicographically (the print order)
  using TermMap = std::map<Exponents, Rat, std::greater<>>;

  LaurentPoly() : vars_(empty_vars()) {}
  LaurentPoly(const Rat& c);
  LaurentPoly(int c) : LaurentPoly(Rat(c)) {}
  LaurentPoly(std::shared_ptr<const VarNames> vars, const Rat& c = Rat(0));

  static LaurentPoly variable(std::shared_ptr<const VarNames> vars, int index, int power = 1);
  static LaurentPoly monomial(std::shared_ptr<const VarNames> vars, const Exponents& e,
                              const Rat& c = Rat(1));
  static std::shared_ptr<const VarNames> make_vars(VarNames names);

  const std::shared_ptr<const VarNames>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_->size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_term() const;
  Rat coefficient(const Exponents& e) const;
  bool is_monomial() const { return terms_.size() == 1; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rat& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rat& c) { return a *= c; }
  friend LaurentPoly operator*(const Rat& c, LaurentPoly a) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  // a += c * b without temporaries
  void add_scaled(const LaurentPoly& b, const Rat& c);
  // a += m * b for a single term m
  void add_term_times(const Exponents& e, const Rat& c, const LaurentPoly& b);
  void add_term(const Exponents& e, const Rat& c);

  LaurentPoly pow(int e) const;  // negative powers only for monomials
  // exact quotient; throws if b does not divide *this
  LaurentPoly exact_div(const LaurentPoly& b) const;
  // replace variable i by value (value must be a monomial if negative powers occur)
  LaurentPoly substitute(int i, const LaurentPoly& value) const;
  LaurentPoly invert_variable(int i) const;  // z_i -> z_i^-1
  Rat evaluate(const std::vector<Rat>& point) const;
  Rat at_one() const;
  // rebuild on another (super)set of variable names, matched by name
  LaurentPoly rebase(std::shared_ptr<const VarNames> vars) const;

  std::string str() const;
  static LaurentPoly parse(std::string_view text, std::shared_ptr<const VarNames> vars);

 private:
  static std::shared_ptr<const VarNames> empty_vars();
  void unify(const LaurentPoly& o);
  std::shared_ptr<const VarNames> vars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace ospo
