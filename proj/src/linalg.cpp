#include "yr/linalg.hpp"

#include <algorithm>

namespace yr {

QMatrix QMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("QMatrix::inverse: not square");
  const int d = rows_;
  QMatrix a = *this, inv = identity(d);
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int r = col; r < d; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("QMatrix::inverse: singular matrix");
    if (piv != col)
      for (int j = 0; j < d; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    const Rational f = a.at(col, col).inverse();
    for (int j = 0; j < d; ++j) {
      a.at(col, j) *= f;
      inv.at(col, j) *= f;
    }
    for (int r = 0; r < d; ++r) {
      if (r == col) continue;
      const Rational g = a.at(r, col);
      if (g.is_zero()) continue;
      for (int j = 0; j < d; ++j) {
        a.at(r, j) -= g * a.at(col, j);
        inv.at(r, j) -= g * inv.at(col, j);
      }
    }
  }
  return inv;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMatrix& a) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int piv = -1;
    for (int r = row; r < a.rows(); ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
    const Rational f = a.at(row, col).inverse();
    for (int j = 0; j < a.cols(); ++j) a.at(row, j) *= f;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row) continue;
      const Rational g = a.at(r, col);
      if (g.is_zero()) continue;
      for (int j = 0; j < a.cols(); ++j) a.at(r, j) -= g * a.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<Rational>> QMatrix::kernel() const {
  QMatrix a = *this;
  const std::vector<int> pivots = rref(a);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int freec = 0; freec < cols_; ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<Rational> v(cols_);
    v[freec] = Rational(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a.at(static_cast<int>(r), freec);
    basis.push_back(std::move(v));
  }
  return basis;
}

int QMatrix::rank() const {
  QMatrix a = *this;
  return static_cast<int>(rref(a).size());
}

bool RowSpace::insert(std::vector<Rational> v) {
  if (static_cast<int>(v.size()) != width_) throw std::invalid_argument("RowSpace: width mismatch");
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rational& c = v[pivots_[r]];
    if (!c.is_zero())
      for (int j = 0; j < width_; ++j) v[j] -= c * rows_[r][j];
  }
  int piv = -1;
  for (int j = 0; j < width_; ++j)
    if (!v[j].is_zero()) {
      piv = j;
      break;
    }
  if (piv < 0) return false;
  const Rational f = v[piv].inverse();
  for (int j = 0; j < width_; ++j) v[j] *= f;
  // Back-substitute into existing rows to keep the reduced form.
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rational& c = rows_[r][piv];
    if (!c.is_zero())
      for (int j = 0; j < width_; ++j) rows_[r][j] -= c * v[j];
  }
  // Insert keeping pivot order.
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, piv);
  return true;
}

}  // namespace yr
