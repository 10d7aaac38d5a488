#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "yr/rational.hpp"

namespace yr {

// Dense univariate polynomial over Rational, coefficients ascending by degree.
// The zero polynomial is the empty coefficient list; otherwise the leading
// coefficient is nonzero.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(const Rational& c) { c_.push_back(c); trim(); }
  Polynomial(long c) : Polynomial(Rational(c)) {}
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(int k, const Rational& c = Rational(1)) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
  }
  static Polynomial variable() { return monomial(1); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

  // Degree of a nonzero polynomial; the zero polynomial has none.
  int degree() const {
    if (is_zero()) throw std::domain_error("Polynomial: degree of zero polynomial");
    return static_cast<int>(c_.size()) - 1;
  }

  const Rational& lc() const {
    if (is_zero()) throw std::domain_error("Polynomial: lc of zero polynomial");
    return c_.back();
  }

  Rational coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[k];
  }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_monic() const { return !is_zero() && lc().is_one(); }

  Rational eval(const Rational& x) const {
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial& operator+=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Rational> v(a.c_.size());
    for (size_t k = 0; k < v.size(); ++k) v[k] = -a.c_[k];
    return Polynomial(std::move(v));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(v));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator*(const Rational& s, const Polynomial& a) {
    std::vector<Rational> v(a.c_.size());
    for (size_t k = 0; k < v.size(); ++k) v[k] = s * a.c_[k];
    return Polynomial(std::move(v));
  }

  // Quotient and remainder, remainder degree < divisor degree.
  std::pair<Polynomial, Polynomial> divrem(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
    Polynomial r = *this;
    std::vector<Rational> q;
    const int dd = d.degree();
    if (!r.is_zero() && r.degree() >= dd) q.assign(r.degree() - dd + 1, Rational(0));
    while (!r.is_zero() && r.degree() >= dd) {
      const int k = r.degree() - dd;
      const Rational f = r.lc() / d.lc();
      q[k] = f;
      for (int t = 0; t <= dd; ++t) r.c_[k + t] -= f * d.c_[t];
      r.trim();
    }
    return {Polynomial(std::move(q)), r};
  }

  Polynomial exact_div(const Polynomial& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) throw std::domain_error("Polynomial: division not exact");
    return q;
  }

  Polynomial monic() const {
    if (is_zero()) throw std::domain_error("Polynomial: monic of zero polynomial");
    return lc().inverse() * *this;
  }

  // p(a*u + b).
  Polynomial compose_affine(const Rational& a, const Rational& b) const {
    Polynomial lin(std::vector<Rational>{b, a});
    Polynomial r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + Polynomial(*it);
    return r;
  }

  std::string str(const std::string& var = "u") const;

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

// Monic gcd; gcd(0,0) = 0.
Polynomial gcd_monic(Polynomial a, Polynomial b);

// All rational roots of a nonzero polynomial, ascending, without multiplicity.
std::vector<Rational> rational_roots(const Polynomial& p);

}  // namespace yr
