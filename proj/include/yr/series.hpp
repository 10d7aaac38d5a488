#pragma once

#include <vector>

#include "yr/linalg.hpp"
#include "yr/nc.hpp"
#include "yr/ratfunc.hpp"

namespace yr {

// Formal series in 1/u truncated at order D: c_0 + c_1 u^{-1} + ... + c_D u^{-D}
// with NCPolynomial coefficients. All arithmetic stays within the cutoff.
class TruncatedSeries {
public:
  explicit TruncatedSeries(int order) : order_(order), c_(order + 1) {
    if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
  }
  static TruncatedSeries one(int order) {
    TruncatedSeries s(order);
    s.c_[0] = NCPolynomial(Rational(1));
    return s;
  }
  static TruncatedSeries constant(const Rational& c, int order) {
    TruncatedSeries s(order);
    s.c_[0] = NCPolynomial(c);
    return s;
  }
  // From rational coefficients c[m] of u^{-m}.
  static TruncatedSeries from_rationals(const std::vector<Rational>& c, int order) {
    TruncatedSeries s(order);
    for (int m = 0; m <= order && m < static_cast<int>(c.size()); ++m)
      s.c_[m] = NCPolynomial(c[m]);
    return s;
  }

  int order() const { return order_; }
  const NCPolynomial& coeff(int m) const { return c_[m]; }
  NCPolynomial& coeff(int m) { return c_[m]; }

  bool is_zero() const {
    for (const auto& c : c_)
      if (!c.is_zero()) return false;
    return true;
  }
  bool is_one() const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  TruncatedSeries& scale(const Rational& s);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  // s(-u): flips the sign of every odd coefficient.
  TruncatedSeries neg_u() const;
  // s(u+c), expanding (u+c)^{-r} = sum_{m>=r} binom(m-1,r-1)(-c)^{m-r} u^{-m}.
  TruncatedSeries shift(const Rational& c) const;
  // Multiplicative inverse; the constant term must be a nonzero scalar.
  TruncatedSeries invert() const;

private:
  void check_order(const TruncatedSeries& o) const {
    if (order_ != o.order_) throw std::invalid_argument("TruncatedSeries: order mismatch");
  }

  int order_;
  std::vector<NCPolynomial> c_;
};

// Square matrix of series with a uniform truncation order.
class MatrixSeries {
public:
  MatrixSeries(int dim, int order)
      : dim_(dim), order_(order), e_(size_t(dim) * dim, TruncatedSeries(order)) {}

  static MatrixSeries identity(int dim, int order) {
    MatrixSeries m(dim, order);
    for (int i = 0; i < dim; ++i) m.at(i, i) = TruncatedSeries::one(order);
    return m;
  }

  int dim() const { return dim_; }
  int order() const { return order_; }
  TruncatedSeries& at(int i, int j) { return e_[size_t(i) * dim_ + j]; }
  const TruncatedSeries& at(int i, int j) const { return e_[size_t(i) * dim_ + j]; }

  bool is_zero() const {
    for (const auto& s : e_)
      if (!s.is_zero()) return false;
    return true;
  }
  friend bool operator==(const MatrixSeries& a, const MatrixSeries& b) {
    return a.dim_ == b.dim_ && a.order_ == b.order_ && a.e_ == b.e_;
  }
  friend bool operator!=(const MatrixSeries& a, const MatrixSeries& b) { return !(a == b); }

  MatrixSeries& operator+=(const MatrixSeries& o);
  MatrixSeries& operator-=(const MatrixSeries& o);
  friend MatrixSeries operator+(MatrixSeries a, const MatrixSeries& b) { return a += b; }
  friend MatrixSeries operator-(MatrixSeries a, const MatrixSeries& b) { return a -= b; }
  friend MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b);

  MatrixSeries neg_u() const;
  MatrixSeries shift(const Rational& c) const;
  MatrixSeries scale_series(const TruncatedSeries& s) const;  // entrywise s * e
  MatrixSeries mul_left(const QMatrix& m) const;
  MatrixSeries mul_right(const QMatrix& m) const;

  // Constant coefficient as a rational matrix; throws if not scalar.
  QMatrix constant_term() const;

  // Inverse as a Neumann series; the constant term must be an invertible
  // rational matrix.
  MatrixSeries inverse() const;

private:
  int dim_, order_;
  std::vector<TruncatedSeries> e_;
};

}  // namespace yr
