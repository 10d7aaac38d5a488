#pragma once

#include <optional>

#include "yr/bivar.hpp"
#include "yr/series.hpp"
#include "yr/tensorop.hpp"

namespace yr {

// T(u): entry (i,j) is delta_ij + sum_{r=1..D} t_ij^{(r)} u^{-r}. 0-based
// indices in code, 1-based generator labels.
MatrixSeries t_matrix(int n, int order);

// T(u)^{-1}; coefficient 1 of entry (i,j) is -t_ij^{(1)}.
MatrixSeries t_inverse(int n, int order);

// Quantum determinant by the column-shifted permutation sum.
TruncatedSeries qdet(int n, int order);

// Quantum determinant of the submatrix with the given 1-based row and column
// index lists (strictly increasing, equal lengths).
TruncatedSeries qdet_submatrix(int n, int order, const std::vector<int>& rows,
                               const std::vector<int>& cols);

// Extraction through the antisymmetrizer identity; cross-checks qdet.
TruncatedSeries qdet_via_antisymmetrizer(int n, int order);

// Comatrix defined by qdet T(u) = That(u) T(u-n+1).
MatrixSeries quantum_comatrix(int n, int order);

// Elements of Y(n) x Y(n) with both legs in PBW normal form.
class TensorNC {
public:
  TensorNC() = default;
  static TensorNC unit() {
    TensorNC t;
    t.t_.emplace(std::make_pair(Word{}, Word{}), Rational(1));
    return t;
  }

  bool is_zero() const { return t_.empty(); }
  const std::map<std::pair<Word, Word>, Rational>& terms() const { return t_; }

  void add(const Word& left, const Word& right, const Rational& c);
  void add_product(const NCPolynomial& left, const NCPolynomial& right, const Rational& scale);
  TensorNC& operator+=(const TensorNC& o);
  TensorNC& scale(const Rational& s);

  friend bool operator==(const TensorNC& a, const TensorNC& b) { return a.t_ == b.t_; }
  friend bool operator!=(const TensorNC& a, const TensorNC& b) { return !(a == b); }
  friend TensorNC tensor_mul(const TensorNC& a, const TensorNC& b);

private:
  std::map<std::pair<Word, Word>, Rational> t_;
};

// Delta(t_ij^{(r)}) = sum_a sum_{p+q=r} t_ia^{(p)} x t_aj^{(q)}, mode 0 a delta.
TensorNC coproduct_generator(int n, int i, int j, int r);

// Multiplicative extension to any element.
TensorNC coproduct(const NCPolynomial& x, int n);

struct CentralityWitness {
  int i, j, r;
};

// True iff [x, t_ij^{(r)}] = 0 for all i,j and r <= max_mode.
bool is_central(const NCPolynomial& x, int n, int max_mode,
                std::optional<CentralityWitness>* witness = nullptr);

// Checks coefficients 1..D of the series, each against modes r <= D - m.
bool is_central_series(const TruncatedSeries& s, int n,
                       std::optional<CentralityWitness>* witness = nullptr);

// Residual of the RTT relation cleared by (u-v), trusted window [1-D..1]^2.
BivariateResidual rtt_residual(int n, int order);
BivariateResidual rtt_residual_for(const MatrixSeries& t, int n);

// The commutation relation between t_ij(u) and the inverse-matrix entries
// t'_rs(v), cleared by (u-v); checked coefficientwise over the trusted
// window. Returns true iff every component identity holds.
bool ttprime_relation_check(int n, int order);
bool ttprime_relation_check_for(const MatrixSeries& t, const MatrixSeries& tinv, int n);

}  // namespace yr
