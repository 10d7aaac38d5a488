#include "yr/reflection.hpp"

#include <functional>
#include <numeric>

namespace yr {

EmbeddedB embed_b(const Signature& sig, int order) {
  MatrixSeries t = t_matrix(sig.n, order);
  MatrixSeries tinv_neg = t.inverse().neg_u();
  return EmbeddedB{sig, t * tinv_neg.mul_left(sig.g_matrix())};
}

BivariateResidual reflection_residual(const MatrixSeries& b, int n) {
  const int order = b.order();
  QMatrix negp = swap_operator(n, 2, 0, 1);
  negp.scale(Rational(-1));
  TwoLegExpr rm = TwoLegExpr::linear_uv(n, Rational(1), Rational(-1), negp);  // (u-v) - P
  TwoLegExpr rp = TwoLegExpr::linear_uv(n, Rational(1), Rational(1), negp);   // (u+v) - P
  TwoLegExpr b1 = TwoLegExpr::series_leg1(n);
  TwoLegExpr b2 = TwoLegExpr::series_leg2(n);
  TwoLegExpr lhs = rm * b1 * rp * b2;
  TwoLegExpr rhs = b2 * rp * b1 * rm;
  PairProductCache cache(b);
  return two_leg_residual(lhs, rhs, cache, 2 - order, 2);
}

MatrixSeries unitarity_residual(const MatrixSeries& b) {
  MatrixSeries r = b * b.neg_u();
  return r - MatrixSeries::identity(b.dim(), b.order());
}

bool g_braid_holds(const QMatrix& g, int n, const Rational& u, const Rational& v) {
  const int dim = n * n;
  const QMatrix p = swap_operator(n, 2, 0, 1);
  const QMatrix g1 = leg_op(n, 2, 0, g);
  const QMatrix g2 = leg_op(n, 2, 1, g);
  QMatrix rm = QMatrix::identity(dim);
  rm.scale(u - v);
  rm -= p;
  QMatrix rp = QMatrix::identity(dim);
  rp.scale(u + v);
  rp -= p;
  return rm * g1 * rp * g2 == g2 * rp * g1 * rm;
}

MatrixSeries perturb_entry(MatrixSeries m, int i, int j, int r) {
  m.at(i, j).coeff(r) += NCPolynomial(Rational(1));
  return m;
}

namespace {

// Expansion of 1/(2u - c) at infinity.
TruncatedSeries inv_linear_series(const Rational& c, int order) {
  Polynomial den(std::vector<Rational>{-c, Rational(2)});
  return TruncatedSeries::from_rationals(
      RationalFunction(Polynomial(1), den).expand_at_infinity(order), order);
}

// Shared core of the sdet and theta extractions: walks the reference row of
// the antisymmetrizer through F_1(u) Rt_12 ... Rt_1n F_2(u-1) ... F_n(u-n+1).
TruncatedSeries antisym_extraction(int n, int order,
                                   const std::function<MatrixSeries(int)>& factor) {
  const QMatrix a = antisymmetrizer(n);
  std::vector<int> ref(n);
  std::iota(ref.begin(), ref.end(), 0);
  const int ref_idx = tensor_encode(n, ref);
  SeriesVec v = series_row(a, ref_idx, order);
  for (int t = 1; t <= n; ++t) {
    v = apply_leg_series(v, n, n, t - 1, factor(t));
    for (int j = t + 1; j <= n; ++j) {
      // Rt_tj = 1 - P_tj/(2u - t - j + 2).
      TruncatedSeries h = inv_linear_series(Rational(t + j - 2), order);
      v = apply_swap_scaled(v, n, n, t - 1, j - 1, h, Rational(-1));
    }
  }
  return v[ref_idx];
}

}  // namespace

TruncatedSeries sklyanin_det(const EmbeddedB& eb) {
  const int order = eb.b.order();
  return antisym_extraction(eb.sig.n, order,
                            [&](int t) { return eb.b.shift(Rational(1 - t)); });
}

RationalFunction theta(const Signature& sig) {
  const int n = sig.n, k = sig.k(), l = sig.l;
  Polynomial num(Rational((l % 2) ? -1 : 1));
  auto lin = [](long a, long b) {  // a*u + b
    return Polynomial(std::vector<Rational>{Rational(b), Rational(a)});
  };
  for (int i = 1; i <= k; ++i) num *= lin(2, -2 * n + 2 * i);
  for (int i = 1; i <= l; ++i) num *= lin(2, -2 * n + 2 * i);
  Polynomial den(Rational(1));
  for (int i = 1; i <= n; ++i) den *= lin(2, -2 * n + i + 1);
  return RationalFunction(num, den);
}

TruncatedSeries theta_series_via_antisym(const Signature& sig, int order) {
  MatrixSeries g(sig.n, order);
  for (int i = 1; i <= sig.n; ++i)
    g.at(i - 1, i - 1) = TruncatedSeries::constant(Rational(sig.eps(i)), order);
  return antisym_extraction(sig.n, order, [&](int) { return g; });
}

TruncatedSeries sdet_normalized(const EmbeddedB& eb) {
  const int n = eb.sig.n, order = eb.b.order();
  const Rational h(n - 1, 2);
  TruncatedSeries th = TruncatedSeries::from_rationals(
      theta(eb.sig).compose_affine(Rational(1), h).expand_at_infinity(order), order);
  return sklyanin_det(eb).shift(h) * th.invert();
}

SdetIdentityReport sdet_identity_check(const Signature& sig, int order) {
  return sdet_identity_check_for(embed_b(sig, order));
}

SdetIdentityReport sdet_identity_check_for(const EmbeddedB& eb) {
  const Signature& sig = eb.sig;
  const int order = eb.b.order();
  SdetIdentityReport rep;
  TruncatedSeries sd = sklyanin_det(eb);

  rep.const_term_ok = sd.coeff(0) == NCPolynomial(Rational((sig.l % 2) ? -1 : 1));

  TruncatedSeries th = TruncatedSeries::from_rationals(
      theta(sig).expand_at_infinity(order), order);
  TruncatedSeries qd = qdet(sig.n, order);
  TruncatedSeries qd_reflected = qd.neg_u().shift(Rational(-(sig.n - 1)));  // qdet T(-u+n-1)
  rep.identity_ok = (sd == th * qd * qd_reflected.invert());

  TruncatedSeries c = sdet_normalized(eb);
  rep.cucu_ok = (c * c.neg_u()).is_one();
  return rep;
}

bool coideal_check(const Signature& sig, int order, bool perturb) {
  const int n = sig.n;
  MatrixSeries t = t_matrix(n, order);
  MatrixSeries tinv_neg = t.inverse().neg_u();
  MatrixSeries b = t * tinv_neg.mul_left(sig.g_matrix());
  MatrixSeries b_left = perturb ? perturb_entry(b, 0, 0, std::min(1, order)) : b;

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // First legs F_{(a,c)} = t_ia(u) t'_cj(-u) as series products.
      std::vector<TruncatedSeries> f;
      f.reserve(n * n);
      for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) f.push_back(t.at(i, a) * tinv_neg.at(c, j));
      for (int m = 0; m <= order; ++m) {
        TensorNC lhs = coproduct(b_left.at(i, j).coeff(m), n);
        TensorNC rhs;
        for (int a = 0; a < n; ++a)
          for (int c = 0; c < n; ++c)
            for (int p = 0; p <= m; ++p)
              rhs.add_product(f[a * n + c].coeff(p), b.at(a, c).coeff(m - p), Rational(1));
        if (lhs != rhs) return false;
      }
    }
  return true;
}

MatrixSeries twist_b(const MatrixSeries& b, const TruncatedSeries& g) {
  if (!g.coeff(0).is_scalar() || !g.coeff(0).scalar_part().is_one())
    throw std::invalid_argument("twist_b: twist must have constant term 1");
  return b.scale_series(g);
}

QMatrix q_operator(int sign) {
  // Q = sum_ij E_ij^t x E_ji with the transposition of the given sign:
  // diagonal units swap, off-diagonal units keep (+) or flip (-) sign.
  QMatrix q(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      QMatrix eij_t(2, 2);
      if (i == j) {
        eij_t.at(1 - i, 1 - j) = Rational(1);
      } else {
        eij_t.at(i, j) = Rational(sign);
      }
      // kron(eij_t, E_ji)
      for (int a = 0; a < 2; ++a)
        for (int c = 0; c < 2; ++c) {
          if (eij_t.at(a, c).is_zero()) continue;
          q.at(a * 2 + j, c * 2 + i) += eij_t.at(a, c);
        }
    }
  return q;
}

namespace {

MatrixSeries leg_embed_series(int n, int m, int leg, const MatrixSeries& s) {
  const int dim = tensor_dim(n, m);
  MatrixSeries out(dim, s.order());
  for (int col = 0; col < dim; ++col) {
    std::vector<int> digits = tensor_decode(n, m, col);
    const int jc = digits[leg];
    for (int a = 0; a < n; ++a) {
      if (s.at(a, jc).is_zero()) continue;
      digits[leg] = a;
      out.at(tensor_encode(n, digits), col) = s.at(a, jc);
    }
    digits[leg] = jc;
  }
  return out;
}

MatrixSeries qmatrix_as_series(const QMatrix& m, int order) {
  MatrixSeries out(m.rows(), order);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) out.at(i, j) = TruncatedSeries::constant(m.at(i, j), order);
  return out;
}

}  // namespace

TwistedMapReport twisted_map_check(int sign, int order, bool perturb) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("twisted_map_check: sign");
  TwistedMapReport rep;
  const Signature sig(2, sign == 1 ? 1 : 0);
  EmbeddedB eb = embed_b(sig, order);
  MatrixSeries s = eb.b.shift(Rational(1, 2));
  if (sign == 1) s = s.mul_right(sig.g_matrix());
  if (perturb) s = perturb_entry(s, 0, 1, std::min(1, order));

  // Relation R(u-v) S_1(u) R^t(-u-v) S_2(v) = S_2(v) R^t(-u-v) S_1(u) R(u-v),
  // cleared by (u-v)(u+v): (u+v) R^t(-u-v) = (u+v) + Q.
  QMatrix negp = swap_operator(2, 2, 0, 1);
  negp.scale(Rational(-1));
  const QMatrix q = q_operator(sign);
  TwoLegExpr rm = TwoLegExpr::linear_uv(2, Rational(1), Rational(-1), negp);
  TwoLegExpr rtq = TwoLegExpr::linear_uv(2, Rational(1), Rational(1), q);
  TwoLegExpr s1 = TwoLegExpr::series_leg1(2);
  TwoLegExpr s2 = TwoLegExpr::series_leg2(2);
  PairProductCache cache(s);
  rep.quatw_ok =
      two_leg_residual(rm * s1 * rtq * s2, s2 * rtq * s1 * rm, cache, 2 - order, 2).is_zero();

  // (1 -+ 1/(2u)) delta(u) Q = Q S_1(u) R(2u) S_2^{-1}(-u).
  MatrixSeries s1e = leg_embed_series(2, 2, 0, s);
  MatrixSeries s2inv_neg = leg_embed_series(2, 2, 1, s.inverse().neg_u());
  TruncatedSeries half_u(order);  // 1/(2u)
  if (order >= 1) half_u.coeff(1) = NCPolynomial(Rational(1, 2));
  MatrixSeries r2u = MatrixSeries::identity(4, order) -
                     qmatrix_as_series(swap_operator(2, 2, 0, 1), order).scale_series(half_u);
  MatrixSeries rhs_op = qmatrix_as_series(q, order) * s1e * r2u * s2inv_neg;

  TruncatedSeries factor = TruncatedSeries::one(order);
  if (order >= 1) factor.coeff(1) = NCPolynomial(Rational(sign == 1 ? -1 : 1, 2));

  int r0 = -1, c0 = -1;
  for (int r = 0; r < 4 && r0 < 0; ++r)
    for (int c = 0; c < 4 && r0 < 0; ++c)
      if (!q.at(r, c).is_zero()) {
        r0 = r;
        c0 = c;
      }
  TruncatedSeries delta = rhs_op.at(r0, c0) * factor.invert();
  delta.scale(q.at(r0, c0).inverse());

  rep.delta_scalar_ok = true;
  TruncatedSeries fd = factor * delta;
  for (int r = 0; r < 4 && rep.delta_scalar_ok; ++r)
    for (int c = 0; c < 4 && rep.delta_scalar_ok; ++c) {
      TruncatedSeries expect = fd;
      expect.scale(q.at(r, c));
      if (rhs_op.at(r, c) != expect) rep.delta_scalar_ok = false;
    }
  rep.delta_unitary_ok = (delta * delta.neg_u()).is_one();
  return rep;
}

}  // namespace yr
