#include "yr/ratfunc.hpp"

namespace yr {

std::vector<Rational> RationalFunction::expand_at_infinity(int order) const {
  std::vector<Rational> out(order + 1);
  if (is_zero()) return out;
  const int dn = num_.degree(), dd = den_.degree();
  if (dn > dd) throw std::domain_error("expand_at_infinity: not regular at infinity");
  // num/den = x^(dd-dn) * N(x)/D(x) with x = 1/u and reversed coefficients.
  // D(0) = lc(den) != 0, so divide power series.
  const int off = dd - dn;
  std::vector<Rational> N(order + 1), D(order + 1);
  for (int k = 0; k <= order; ++k) {
    N[k] = num_.coeff(dn - k);
    D[k] = den_.coeff(dd - k);
  }
  std::vector<Rational> q(order + 1);
  const Rational d0inv = D[0].inverse();
  for (int k = 0; k + off <= order; ++k) {
    Rational s = N[k];
    for (int t = 0; t < k; ++t) s -= q[t] * D[k - t];
    q[k] = s * d0inv;
    out[k + off] = q[k];
  }
  return out;
}

}  // namespace yr
