#pragma once

#include "yr/ratfunc.hpp"
#include "yr/yangian.hpp"

namespace yr {

// G = diag(+1 x k, -1 x l) with k = n - l and 0 <= l <= n/2.
struct Signature {
  int n, l;
  Signature(int n_, int l_) : n(n_), l(l_) {
    if (n < 1 || l < 0 || 2 * l > n)
      throw std::invalid_argument("Signature: need 0 <= l <= n/2");
  }
  int k() const { return n - l; }
  int eps(int i) const { return i <= k() ? 1 : -1; }  // 1-based
  QMatrix g_matrix() const {
    QMatrix g(n, n);
    for (int i = 1; i <= n; ++i) g.at(i - 1, i - 1) = Rational(eps(i));
    return g;
  }
};

struct EmbeddedB {
  Signature sig;
  MatrixSeries b;
};

// b_ij(u) = sum_a eps_a t_ia(u) t'_aj(-u), realized as T(u) G T^{-1}(-u).
EmbeddedB embed_b(const Signature& sig, int order);

// Residual of the reflection equation cleared by (u-v)(u+v), trusted window
// [2-D .. 2]^2.
BivariateResidual reflection_residual(const MatrixSeries& b, int n);
inline BivariateResidual reflection_residual(const EmbeddedB& eb) {
  return reflection_residual(eb.b, eb.sig.n);
}

// B(u) B(-u) - 1.
MatrixSeries unitarity_residual(const MatrixSeries& b);

// Exact check of R(u-v) G1 R(u+v) G2 = G2 R(u+v) G1 R(u-v) after clearing
// both denominators, for one rational parameter pair.
bool g_braid_holds(const QMatrix& g, int n, const Rational& u, const Rational& v);

// Additive bump of one series coefficient; negative-control helper.
MatrixSeries perturb_entry(MatrixSeries m, int i, int j, int r);

// Sklyanin determinant extracted from the antisymmetrized product of B's and
// shifted-argument R factors.
TruncatedSeries sklyanin_det(const EmbeddedB& eb);

// theta(u) = (-1)^l prod_{i<=k}(2u-2n+2i) prod_{i<=l}(2u-2n+2i)
//            / prod_{i<=n}(2u-2n+i+1).
RationalFunction theta(const Signature& sig);

// The same scalar extracted from the antisymmetrized product of G's and R
// factors; cross-checks the closed form.
TruncatedSeries theta_series_via_antisym(const Signature& sig, int order);

struct SdetIdentityReport {
  bool identity_ok = false;    // sdet B(u) = theta(u) qdet T(u) qdet T(-u+n-1)^{-1}
  bool const_term_ok = false;  // constant term (-1)^l
  bool cucu_ok = false;        // c(u) c(-u) = 1 for the normalized series
  bool all_ok() const { return identity_ok && const_term_ok && cucu_ok; }
};
SdetIdentityReport sdet_identity_check(const Signature& sig, int order);
SdetIdentityReport sdet_identity_check_for(const EmbeddedB& eb);

// Normalized central series c(u) = sdet B(u+(n-1)/2) theta(u+(n-1)/2)^{-1}.
TruncatedSeries sdet_normalized(const EmbeddedB& eb);

// Delta(b_ij(u)) = sum_{a,c} t_ia(u) t'_cj(-u) x b_ac(u), coefficientwise.
// With perturb set, the left side uses a bumped coefficient; the check must
// then fail.
bool coideal_check(const Signature& sig, int order, bool perturb = false);

// B(u) -> g(u) B(u); reflection equation survives, unitarity iff g(u)g(-u)=1.
MatrixSeries twist_b(const MatrixSeries& b, const TruncatedSeries& g);

struct TwistedMapReport {
  bool quatw_ok = false;         // relation with the transposed R factor
  bool delta_scalar_ok = false;  // Q S_1(u) R(2u) S_2^{-1}(-u) proportional to Q
  bool delta_unitary_ok = false; // delta(u) delta(-u) = 1
  bool all_ok() const { return quatw_ok && delta_scalar_ok && delta_unitary_ok; }
};

// sign = -1 pairs with (2,0), sign = +1 with (2,1): S(u) = B(u+1/2) resp.
// B(u+1/2) G. With perturb set, S is bumped first.
TwistedMapReport twisted_map_check(int sign, int order, bool perturb = false);

// The transposed-permutation operator Q on (C^2)^{x2} for the given sign.
QMatrix q_operator(int sign);

}  // namespace yr
