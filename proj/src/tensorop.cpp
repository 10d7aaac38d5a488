#include "yr/tensorop.hpp"

#include <algorithm>
#include <numeric>

namespace yr {

QMatrix perm_operator(int n, const std::vector<int>& sigma) {
  const int m = static_cast<int>(sigma.size());
  const int dim = tensor_dim(n, m);
  QMatrix p(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const std::vector<int> in = tensor_decode(n, m, col);
    std::vector<int> out(m);
    for (int t = 0; t < m; ++t) out[sigma[t]] = in[t];
    p.at(tensor_encode(n, out), col) = Rational(1);
  }
  return p;
}

QMatrix swap_operator(int n, int m, int a, int b) {
  std::vector<int> sigma(m);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::swap(sigma[a], sigma[b]);
  return perm_operator(n, sigma);
}

QMatrix leg_op(int n, int m, int leg, const QMatrix& a) {
  const int dim = tensor_dim(n, m);
  QMatrix r(dim, dim);
  for (int col = 0; col < dim; ++col) {
    std::vector<int> digits = tensor_decode(n, m, col);
    const int jc = digits[leg];
    for (int i = 0; i < n; ++i) {
      const Rational& c = a.at(i, jc);
      if (c.is_zero()) continue;
      digits[leg] = i;
      r.at(tensor_encode(n, digits), col) += c;
    }
    digits[leg] = jc;
  }
  return r;
}

int perm_sign(const std::vector<int>& sigma) {
  int inv = 0;
  for (size_t a = 0; a < sigma.size(); ++a)
    for (size_t b = a + 1; b < sigma.size(); ++b)
      if (sigma[a] > sigma[b]) ++inv;
  return inv % 2 ? -1 : 1;
}

QMatrix antisymmetrizer(int n) {
  const int dim = tensor_dim(n, n);
  QMatrix a(dim, dim);
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    QMatrix p = perm_operator(n, sigma);
    p.scale(Rational(perm_sign(sigma)));
    a += p;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return a;
}

QMatrix r_product_specialized(int n) {
  const int dim = tensor_dim(n, n);
  QMatrix prod = QMatrix::identity(dim);
  // (R_{n-1,n}) (R_{n-2,n} R_{n-2,n-1}) ... (R_{1n} ... R_{12}), 1-based legs;
  // R_ij = 1 - P_ij / (j - i) at the staircase specialization.
  for (int i = n - 1; i >= 1; --i)
    for (int j = n; j >= i + 1; --j) {
      QMatrix r = swap_operator(n, n, i - 1, j - 1);
      r.scale(Rational(-1, j - i));
      r += QMatrix::identity(dim);
      prod = prod * r;
    }
  return prod;
}

bool ybe_holds(int n, const Rational& u1, const Rational& u2, const Rational& u3) {
  const int dim = tensor_dim(n, 3);
  auto cleared_r = [&](int a, int b, const Rational& arg) {
    QMatrix m = QMatrix::identity(dim);
    m.scale(arg);
    return m - swap_operator(n, 3, a, b);
  };
  QMatrix r12 = cleared_r(0, 1, u1 - u2);
  QMatrix r13 = cleared_r(0, 2, u1 - u3);
  QMatrix r23 = cleared_r(1, 2, u2 - u3);
  return r12 * r13 * r23 == r23 * r13 * r12;
}

SeriesVec series_row(const QMatrix& a, int row, int order) {
  SeriesVec v;
  v.reserve(a.cols());
  for (int j = 0; j < a.cols(); ++j)
    v.push_back(TruncatedSeries::constant(a.at(row, j), order));
  return v;
}

SeriesVec apply_qmatrix(const SeriesVec& v, const QMatrix& q) {
  SeriesVec out(q.cols(), TruncatedSeries(v.at(0).order()));
  for (int r = 0; r < q.rows(); ++r) {
    if (v[r].is_zero()) continue;
    for (int c = 0; c < q.cols(); ++c) {
      const Rational& f = q.at(r, c);
      if (f.is_zero()) continue;
      TruncatedSeries t = v[r];
      out[c] += t.scale(f);
    }
  }
  return out;
}

SeriesVec apply_leg_series(const SeriesVec& v, int n, int m, int leg, const MatrixSeries& s) {
  const int dim = tensor_dim(n, m);
  SeriesVec out(dim, TruncatedSeries(v.at(0).order()));
  for (int c = 0; c < dim; ++c) {
    std::vector<int> digits = tensor_decode(n, m, c);
    const int jc = digits[leg];
    TruncatedSeries acc(v.at(0).order());
    for (int a = 0; a < n; ++a) {
      if (s.at(a, jc).is_zero()) continue;
      digits[leg] = a;
      const TruncatedSeries& va = v[tensor_encode(n, digits)];
      if (va.is_zero()) continue;
      acc += va * s.at(a, jc);
    }
    out[c] = std::move(acc);
  }
  return out;
}

SeriesVec apply_swap_scaled(const SeriesVec& v, int n, int m, int a, int b,
                            const TruncatedSeries& h, const Rational& sign) {
  const int dim = tensor_dim(n, m);
  SeriesVec out = v;
  for (int c = 0; c < dim; ++c) {
    std::vector<int> digits = tensor_decode(n, m, c);
    std::swap(digits[a], digits[b]);
    const TruncatedSeries& src = v[tensor_encode(n, digits)];
    if (src.is_zero()) continue;
    TruncatedSeries t = src * h;
    out[c] += t.scale(sign);
  }
  return out;
}

}  // namespace yr
