#pragma once

#include <vector>

#include "yr/linalg.hpp"
#include "yr/series.hpp"

namespace yr {

// Operators on (C^n)^{tensor m}. Basis vectors are multi-indices with
// 0-based digits, encoded base n, leg 0 the most significant digit.

inline int tensor_dim(int n, int m) {
  int d = 1;
  for (int t = 0; t < m; ++t) d *= n;
  return d;
}

inline int tensor_encode(int n, const std::vector<int>& digits) {
  int idx = 0;
  for (int d : digits) idx = idx * n + d;
  return idx;
}

inline std::vector<int> tensor_decode(int n, int m, int idx) {
  std::vector<int> digits(m);
  for (int t = m - 1; t >= 0; --t) {
    digits[t] = idx % n;
    idx /= n;
  }
  return digits;
}

// P_sigma moves the content of leg t to leg sigma[t]:
// P_sigma (e_{i_0} ... e_{i_{m-1}}) = e_{j_0} ... with j_{sigma[t]} = i_t.
QMatrix perm_operator(int n, const std::vector<int>& sigma);

QMatrix swap_operator(int n, int m, int a, int b);

// A acting on one leg, identity elsewhere.
QMatrix leg_op(int n, int m, int leg, const QMatrix& a);

int perm_sign(const std::vector<int>& sigma);

// Unnormalized antisymmetrizer sum_p sgn(p) P_p on (C^n)^{tensor n}.
QMatrix antisymmetrizer(int n);

// The staircase product of Yang R-matrices R_ij(u_i - u_j) evaluated at
// u_i = u - i + 1; the arguments are the integer differences j - i, so the
// result is an exact rational operator. Equals the antisymmetrizer up to
// overall scale.
QMatrix r_product_specialized(int n);

// Yang-Baxter R_12 R_13 R_23 = R_23 R_13 R_12 with cleared denominators for
// exact rational spectral parameters.
bool ybe_holds(int n, const Rational& u1, const Rational& u2, const Rational& u3);

// Row vector of series over (C^n)^{tensor m}; used to extract determinant
// series by following one matrix row through an operator product.
using SeriesVec = std::vector<TruncatedSeries>;

SeriesVec series_row(const QMatrix& a, int row, int order);

// v <- v * Q (rational operator on the right).
SeriesVec apply_qmatrix(const SeriesVec& v, const QMatrix& q);

// v <- v * S_leg where the n x n matrix series S acts on one leg.
SeriesVec apply_leg_series(const SeriesVec& v, int n, int m, int leg, const MatrixSeries& s);

// v <- v * (I + sign * h(u) * P_ab): the cleared-scale application of a Yang
// R factor whose inverse spectral denominator has been expanded as h(u).
SeriesVec apply_swap_scaled(const SeriesVec& v, int n, int m, int a, int b,
                            const TruncatedSeries& h, const Rational& sign);

}  // namespace yr
