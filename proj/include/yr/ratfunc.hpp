#pragma once

#include <string>
#include <vector>

#include "yr/polynomial.hpp"

namespace yr {

// Reduced ratio of polynomials: gcd(num, den) = 1, den monic and nonzero.
class RationalFunction {
public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(const Rational& c) : num_(c), den_(1) {}
  RationalFunction(long c) : num_(Rational(c)), den_(1) {}
  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    reduce();
  }
  explicit RationalFunction(Polynomial num) : num_(std::move(num)), den_(1) {}

  static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a) {
    RationalFunction r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  RationalFunction inverse() const {
    if (is_zero()) throw std::domain_error("RationalFunction: inverse of zero");
    return RationalFunction(den_, num_);
  }

  // f(a*u + b), a nonzero.
  RationalFunction compose_affine(const Rational& a, const Rational& b) const {
    if (a.is_zero()) throw std::invalid_argument("compose_affine: degenerate substitution");
    return RationalFunction(num_.compose_affine(a, b), den_.compose_affine(a, b));
  }
  RationalFunction neg_u() const { return compose_affine(Rational(-1), Rational(0)); }
  RationalFunction shift(const Rational& c) const { return compose_affine(Rational(1), c); }

  Rational evaluate(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("RationalFunction: evaluation at pole");
    return num_.eval(x) / d;
  }

  // Limit as u -> infinity; requires deg num <= deg den.
  Rational limit_at_infinity() const {
    if (is_zero()) return Rational(0);
    if (num_.degree() > den_.degree())
      throw std::domain_error("RationalFunction: divergent at infinity");
    if (num_.degree() < den_.degree()) return Rational(0);
    return num_.lc() / den_.lc();
  }

  // Coefficients of the expansion at u = infinity in powers of 1/u, orders
  // 0..D; requires deg num <= deg den.
  std::vector<Rational> expand_at_infinity(int order) const;

  std::string str(const std::string& var = "u") const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
  }

private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = Polynomial(1);
      return;
    }
    Polynomial g = gcd_monic(num_, den_);
    if (!g.is_one()) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
    const Rational l = den_.lc();
    if (!l.is_one()) {
      num_ = l.inverse() * num_;
      den_ = l.inverse() * den_;
    }
  }

  Polynomial num_, den_;
};

}  // namespace yr
