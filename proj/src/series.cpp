#include "yr/series.hpp"

namespace yr {

bool TruncatedSeries::is_one() const {
  if (!c_[0].is_scalar() || !c_[0].scalar_part().is_one()) return false;
  for (int m = 1; m <= order_; ++m)
    if (!c_[m].is_zero()) return false;
  return true;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  check_order(o);
  for (int m = 0; m <= order_; ++m) c_[m] += o.c_[m];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  check_order(o);
  for (int m = 0; m <= order_; ++m) c_[m] -= o.c_[m];
  return *this;
}

TruncatedSeries& TruncatedSeries::scale(const Rational& s) {
  for (auto& c : c_) c.scale(s);
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("TruncatedSeries: order mismatch");
  TruncatedSeries r(a.order());
  for (int p = 0; p <= a.order(); ++p) {
    if (a.coeff(p).is_zero()) continue;
    for (int q = 0; p + q <= a.order(); ++q) {
      if (b.coeff(q).is_zero()) continue;
      r.coeff(p + q) += nc_mul(a.coeff(p), b.coeff(q));
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::neg_u() const {
  TruncatedSeries r = *this;
  for (int m = 1; m <= order_; m += 2) r.c_[m].scale(Rational(-1));
  return r;
}

TruncatedSeries TruncatedSeries::shift(const Rational& c) const {
  if (c.is_zero()) return *this;
  TruncatedSeries out(order_);
  out.c_[0] = c_[0];
  for (int m = 1; m <= order_; ++m) {
    NCPolynomial acc;
    for (int r = 1; r <= m; ++r) {
      if (c_[r].is_zero()) continue;
      const Rational w = binom(m - 1, r - 1) * (-c).pow(m - r);
      acc.add_scaled(c_[r], w);
    }
    out.c_[m] = std::move(acc);
  }
  return out;
}

TruncatedSeries TruncatedSeries::invert() const {
  if (!c_[0].is_scalar() || c_[0].scalar_part().is_zero())
    throw std::domain_error("TruncatedSeries::invert: constant term not an invertible scalar");
  const Rational c0inv = c_[0].scalar_part().inverse();
  TruncatedSeries r(order_);
  r.c_[0] = NCPolynomial(c0inv);
  for (int m = 1; m <= order_; ++m) {
    NCPolynomial acc;
    for (int t = 1; t <= m; ++t) {
      if (c_[t].is_zero() || r.c_[m - t].is_zero()) continue;
      acc += nc_mul(c_[t], r.c_[m - t]);
    }
    acc.scale(-c0inv);
    r.c_[m] = std::move(acc);
  }
  return r;
}

MatrixSeries& MatrixSeries::operator+=(const MatrixSeries& o) {
  if (dim_ != o.dim_ || order_ != o.order_) throw std::invalid_argument("MatrixSeries: mismatch");
  for (size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

MatrixSeries& MatrixSeries::operator-=(const MatrixSeries& o) {
  if (dim_ != o.dim_ || order_ != o.order_) throw std::invalid_argument("MatrixSeries: mismatch");
  for (size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b) {
  if (a.dim() != b.dim() || a.order() != b.order())
    throw std::invalid_argument("MatrixSeries: mismatch");
  MatrixSeries r(a.dim(), a.order());
  for (int i = 0; i < a.dim(); ++i)
    for (int k = 0; k < a.dim(); ++k) {
      const TruncatedSeries& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < a.dim(); ++j) {
        const TruncatedSeries& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

MatrixSeries MatrixSeries::neg_u() const {
  MatrixSeries r = *this;
  for (auto& s : r.e_) s = s.neg_u();
  return r;
}

MatrixSeries MatrixSeries::shift(const Rational& c) const {
  MatrixSeries r = *this;
  for (auto& s : r.e_) s = s.shift(c);
  return r;
}

MatrixSeries MatrixSeries::scale_series(const TruncatedSeries& s) const {
  MatrixSeries r(dim_, order_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (!at(i, j).is_zero()) r.at(i, j) = s * at(i, j);
  return r;
}

MatrixSeries MatrixSeries::mul_left(const QMatrix& m) const {
  if (m.cols() != dim_ || m.rows() != dim_) throw std::invalid_argument("MatrixSeries: mismatch");
  MatrixSeries r(dim_, order_);
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      const Rational& f = m.at(i, k);
      if (f.is_zero()) continue;
      for (int j = 0; j < dim_; ++j) {
        if (at(k, j).is_zero()) continue;
        TruncatedSeries t = at(k, j);
        r.at(i, j) += t.scale(f);
      }
    }
  return r;
}

MatrixSeries MatrixSeries::mul_right(const QMatrix& m) const {
  if (m.cols() != dim_ || m.rows() != dim_) throw std::invalid_argument("MatrixSeries: mismatch");
  MatrixSeries r(dim_, order_);
  for (int k = 0; k < dim_; ++k)
    for (int j = 0; j < dim_; ++j) {
      const Rational& f = m.at(k, j);
      if (f.is_zero()) continue;
      for (int i = 0; i < dim_; ++i) {
        if (at(i, k).is_zero()) continue;
        TruncatedSeries t = at(i, k);
        r.at(i, j) += t.scale(f);
      }
    }
  return r;
}

QMatrix MatrixSeries::constant_term() const {
  QMatrix m(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      const NCPolynomial& c = at(i, j).coeff(0);
      if (!c.is_scalar()) throw std::domain_error("MatrixSeries: constant term not scalar");
      m.at(i, j) = c.scalar_part();
    }
  return m;
}

MatrixSeries MatrixSeries::inverse() const {
  const QMatrix c0inv = constant_term().inverse();
  // M = C0 (1 + N) with N starting at order 1; M^{-1} = sum (-N)^k C0^{-1}.
  MatrixSeries n = mul_left(c0inv);
  for (int i = 0; i < dim_; ++i) n.at(i, i) -= TruncatedSeries::one(order_);
  MatrixSeries acc = MatrixSeries::identity(dim_, order_);
  MatrixSeries pw = MatrixSeries::identity(dim_, order_);
  for (int k = 1; k <= order_; ++k) {
    pw = pw * n;
    if (pw.is_zero()) break;
    if (k % 2 == 1) {
      acc -= pw;
    } else {
      acc += pw;
    }
  }
  return acc.mul_right(c0inv);
}

}  // namespace yr
