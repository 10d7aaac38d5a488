#pragma once

#include <stdexcept>
#include <vector>

#include "yr/rational.hpp"

namespace yr {

// Dense rational matrix, row-major.
class QMatrix {
public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}

  static QMatrix identity(int d) {
    QMatrix m(d, d);
    for (int i = 0; i < d; ++i) m.at(i, i) = Rational(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

  QMatrix& operator+=(const QMatrix& o) {
    check_same(o);
    for (size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
  }
  QMatrix& operator-=(const QMatrix& o) {
    check_same(o);
    for (size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
  }
  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }

  QMatrix& scale(const Rational& s) {
    for (auto& x : e_) x *= s;
    return *this;
  }
  friend QMatrix operator*(const Rational& s, QMatrix a) { return a.scale(s); }

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("QMatrix: shape mismatch");
    QMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Rational& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const Rational& bkj = b.at(k, j);
          if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
        }
      }
    return r;
  }

  QMatrix transpose() const {
    QMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  // Gauss-Jordan inverse; throws on a singular matrix.
  QMatrix inverse() const;

  // Basis of the right kernel, reduced canonical form.
  std::vector<std::vector<Rational>> kernel() const;

  int rank() const;

private:
  void check_same(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("QMatrix: shape mismatch");
  }

  int rows_, cols_;
  std::vector<Rational> e_;
};

// Maintains a row space in reduced echelon form; used for span growth.
class RowSpace {
public:
  explicit RowSpace(int width) : width_(width) {}
  // Returns true if the vector enlarged the span.
  bool insert(std::vector<Rational> v);
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

private:
  int width_;
  std::vector<std::vector<Rational>> rows_;  // sorted by pivot column
  std::vector<int> pivots_;
};

}  // namespace yr
