#include "ospo/poly_matrix.hpp"

#include <stdexcept>

namespace ospo {

static void check_square(const PolyMatrix& m) {
  for (auto& row : m)
    if (row.size() != m.size()) throw std::invalid_argument("determinant of a non-square matrix");
}

static LaurentPoly cofactor_rec(const PolyMatrix& m, std::vector<int>& cols, int row) {
  int n = static_cast<int>(m.size());
  if (row == n) return LaurentPoly(Rat(1));
  LaurentPoly total;
  int sign = 1;
  for (int c = 0; c < n; ++c) {
    if (cols[c]) continue;
    if (!m[row][c].is_zero()) {
      cols[c] = 1;
      LaurentPoly minor = cofactor_rec(m, cols, row + 1);
      cols[c] = 0;
      total.add_scaled(m[row][c] * minor, Rat(sign));
    }
    sign = -sign;
  }
  return total;
}

LaurentPoly det_cofactor(const PolyMatrix& m) {
  check_square(m);
  std::vector<int> cols(m.size(), 0);
  return cofactor_rec(m, cols, 0);
}

LaurentPoly det_bareiss(const PolyMatrix& m0) {
  check_square(m0);
  PolyMatrix m = m0;
  int n = static_cast<int>(m.size());
  if (n == 0) return LaurentPoly(Rat(1));
  int sign = 1;
  LaurentPoly prev(Rat(1));
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return LaurentPoly(m0[0][0].vars());
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        LaurentPoly v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = v.exact_div(prev);
      }
    }
    prev = m[k][k];
  }
  LaurentPoly d = m[n - 1][n - 1];
  if (sign < 0) d = -d;
  return d;
}

LaurentPoly det_poly(const PolyMatrix& m) {
  check_square(m);
  if (m.size() <= 4) return det_cofactor(m);
  return det_bareiss(m);
}

}  // namespace ospo
