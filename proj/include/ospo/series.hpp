#pragma once

#include <map>
#include <vector>

#include "ospo/laurent.hpp"

namespace ospo {

// Power series in y_1..y_q with Laurent-polynomial coefficients, truncated at
// total y-degree D.
class TruncSeries {
 public:
  using YMono = std::vector<int>;

  TruncSeries(int q, int degree, std::shared_ptr<const VarNames> zvars);
  static TruncSeries one(int q, int degree, std::shared_ptr<const VarNames> zvars);

  int q() const { return q_; }
  int degree() const { return degree_; }
  const std::shared_ptr<const VarNames>& zvars() const { return zvars_; }
  const std::map<YMono, LaurentPoly>& coefficients() const { return coef_; }
  LaurentPoly coefficient(const YMono& m) const;
  void add(const YMono& m, const LaurentPoly& c);

  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  friend bool operator==(const TruncSeries& a, const TruncSeries& b);

  // inverse of a series with invertible scalar constant term
  TruncSeries inverse() const;

  // in-place factor multiplications, cheaper than a full product
  void mul_one_plus(int j, const LaurentPoly& c);           // * (1 + c y_j)
  void mul_geometric(int j, const LaurentPoly& c);          // * (1 - c y_j)^{-1}
  void mul_one_minus_pair(int i, int j);                    // * (1 - y_i y_j)

  // (1 - c y)^{-1} where y is a single monomial of positive degree
  static TruncSeries geometric(int q, int degree, std::shared_ptr<const VarNames> zvars,
                               const YMono& y, const LaurentPoly& c);

 private:
  void check_compatible(const TruncSeries& o) const;
  int q_, degree_;
  std::shared_ptr<const VarNames> zvars_;
  std::map<YMono, LaurentPoly> coef_;
};

// all exponent vectors of length q with total degree <= D, graded then lex
std::vector<std::vector<int>> monomials_up_to(int q, int degree);

// Coefficient of the Schur polynomial s_lambda(y_1..y_q) in a symmetric
// series f; uses [y^{lambda+delta}] (a_delta * f).
LaurentPoly schur_coefficient(const TruncSeries& f, const std::vector<int>& lambda);

}  // namespace ospo
