#pragma once

#include <optional>

#include "yr/reflection.hpp"

namespace yr {

// Dense matrix over the rational-function field Q(u).
class RFMatrix {
public:
  RFMatrix() : rows_(0), cols_(0) {}
  RFMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}
  static RFMatrix identity(int d) {
    RFMatrix m(d, d);
    for (int i = 0; i < d; ++i) m.at(i, i) = RationalFunction(Rational(1));
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  RationalFunction& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const RationalFunction& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  bool is_zero() const;
  bool is_identity() const;
  friend bool operator==(const RFMatrix& a, const RFMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const RFMatrix& a, const RFMatrix& b) { return !(a == b); }

  RFMatrix& operator+=(const RFMatrix& o);
  RFMatrix& operator-=(const RFMatrix& o);
  friend RFMatrix operator+(RFMatrix a, const RFMatrix& b) { return a += b; }
  friend RFMatrix operator-(RFMatrix a, const RFMatrix& b) { return a -= b; }
  friend RFMatrix operator*(const RFMatrix& a, const RFMatrix& b);

  RFMatrix compose_affine(const Rational& a, const Rational& b) const;
  RFMatrix scale(const RationalFunction& f) const;

  // Exact Gauss-Jordan inverse; every entry stays in reduced canonical form
  // after each pivot step.
  RFMatrix inverse() const;

  // Kronecker product.
  friend RFMatrix kron(const RFMatrix& a, const RFMatrix& b);

private:
  int rows_, cols_;
  std::vector<RationalFunction> e_;
};

// Finite-dimensional module given by the n x n block matrix of d x d
// rational-function actions of t_ij(u) (Yangian) or b_ij(u) (reflection
// algebra, tagged with its signature).
struct FiniteModule {
  int n = 0;
  int dim = 0;
  bool b_module = false;
  int l = 0;  // meaningful for B-modules
  std::vector<RFMatrix> blocks;

  const RFMatrix& block(int i, int j) const { return blocks[size_t(i) * n + j]; }
  RFMatrix& block(int i, int j) { return blocks[size_t(i) * n + j]; }
};

FiniteModule trivial_module(int n);

// Y(2)-module pulled back from the irreducible gl(2)-module with highest
// weight (alpha, beta) through t_ij(u) -> delta_ij + E_ij u^{-1}; requires
// alpha - beta a nonnegative integer.
FiniteModule evaluation_module(const Rational& alpha, const Rational& beta);

// The vector representation for any n: d = n, same evaluation convention.
FiniteModule vector_evaluation_module(int n);

FiniteModule tensor_module(const FiniteModule& m1, const FiniteModule& m2);

// b_ij(u) -> delta_ij (u+gamma)/(eps_i u - gamma); requires l > 0.
FiniteModule one_dim_b_module(const Signature& sig, const Rational& gamma);

// Pull a Yangian module back through the embedding: the B(n,l)-module with
// b_ij(u) = sum_a eps_a T(u)_ia (T(-u)^{-1})_aj, exact over Q(u).
FiniteModule restrict_to_b(const FiniteModule& m, int l);

// Coideal tensor action of B(n,l) on L x V.
FiniteModule b_tensor_module(const FiniteModule& yangian_mod, const FiniteModule& b_mod);

// B(u) B(-u) = 1 as exact rational-function matrices.
bool unitarity_exact(const FiniteModule& m);

struct HighestVectorResult {
  int kernel_dim = 0;
  bool eigen_ok = false;                 // vector is a joint eigenvector of the diagonal
  std::vector<Rational> xi;              // primitive representative when kernel_dim == 1
  std::vector<RationalFunction> weight;  // lambda_i(u) or mu_i(u)
  bool ok() const { return kernel_dim == 1 && eigen_ok; }
};

// Joint kernel of the strictly-upper blocks plus diagonal eigenvalues.
HighestVectorResult highest_vector(const FiniteModule& m);

// Closed-form highest weight of the restriction (or of L x V(l-gamma) when
// gamma is given): mu_n from the unitarized ratio, the rest by the downward
// recursion through the mu-tilde ratios.
std::vector<RationalFunction> predicted_mu(const std::vector<RationalFunction>& lambda,
                                           const Signature& sig,
                                           const std::optional<Rational>& gamma = std::nullopt);

// Eigenvalues of t'_ii(u) on the highest vector of L(lambda(u)).
std::vector<RationalFunction> tprime_highest_eigenvalues(
    const std::vector<RationalFunction>& lambda, int n);

struct CyclicSpanResult {
  int dim = 0;
  std::vector<std::vector<Rational>> basis;
};

// Dimension of the span of xi under the numerator coefficient matrices of
// all blocks after clearing the common denominator.
CyclicSpanResult cyclic_span(const FiniteModule& m, const std::vector<Rational>& xi);

}  // namespace yr
