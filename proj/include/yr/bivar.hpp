#pragma once

#include <array>
#include <map>
#include <tuple>

#include "yr/linalg.hpp"
#include "yr/series.hpp"

namespace yr {

// Machinery for two-variable operator identities on Y(n) x End(C^n)^{x2}
// after clearing the rational prefactors: both sides become polynomials in
// u, v with series tails, and each side contains at most one series factor
// in u and one in v. Expressions are kept factored: a term records monomial
// exponents, references into a series pool for the u and v slots, the order
// in which the two algebra coefficients multiply, and a rational matrix on
// the two End legs.
struct TwoLegTerm {
  int eu = 0, ev = 0;
  int us = -1, vs = -1;  // pool index i*n+j, or -1 for no series factor
  bool v_first = false;  // algebra product order when both slots are filled
  QMatrix m;             // n^2 x n^2
};

class TwoLegExpr {
public:
  TwoLegExpr(int n, std::vector<TwoLegTerm> terms) : n_(n), terms_(std::move(terms)) {}

  // (cu*u + cv*v) * I + C.
  static TwoLegExpr linear_uv(int n, const Rational& cu, const Rational& cv, const QMatrix& c);
  // The series matrix placed on leg 1 (entries referenced from the pool,
  // evaluated at u) or on leg 2 (evaluated at v).
  static TwoLegExpr series_leg1(int n);
  static TwoLegExpr series_leg2(int n);

  friend TwoLegExpr operator*(const TwoLegExpr& a, const TwoLegExpr& b);

  int n() const { return n_; }
  const std::vector<TwoLegTerm>& terms() const { return terms_; }

private:
  int n_;
  std::vector<TwoLegTerm> terms_;
};

// LHS - RHS of a two-leg identity restricted to the trusted exponent window
// [lo..hi]^2 where truncation to order D leaves the coefficients exact.
// Nonzero entries are keyed by (e_u, e_v, row, col).
struct BivariateResidual {
  int lo = 0, hi = 0;
  std::map<std::array<int, 4>, NCPolynomial> entries;
  bool is_zero() const { return entries.empty(); }
};

// Memoized products pool[us]^(p) * pool[vs]^(q) in both algebra orders.
class PairProductCache {
public:
  explicit PairProductCache(const MatrixSeries& pool) : pool_(pool) {}
  const NCPolynomial& get(int us, int p, int vs, int q, bool v_first);
  const MatrixSeries& pool() const { return pool_; }

private:
  const MatrixSeries& pool_;
  std::map<std::tuple<int, int, int, int, bool>, NCPolynomial> memo_;
  NCPolynomial zero_;
};

// Expands LHS - RHS over the window [lo..hi]^2; both sides draw their series
// slots from the same pool matrix (evaluated at u for leg 1, v for leg 2).
BivariateResidual two_leg_residual(const TwoLegExpr& lhs, const TwoLegExpr& rhs,
                                   PairProductCache& cache, int lo, int hi);

}  // namespace yr
