#include "yr/repmod.hpp"

#include <algorithm>

namespace yr {

bool RFMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool RFMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j && !at(i, j).is_one()) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

RFMatrix& RFMatrix::operator+=(const RFMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RFMatrix: shape");
  for (size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

RFMatrix& RFMatrix::operator-=(const RFMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RFMatrix: shape");
  for (size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

RFMatrix operator*(const RFMatrix& a, const RFMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("RFMatrix: shape");
  RFMatrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const RationalFunction& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) += aik * b.at(k, j);
      }
    }
  return r;
}

RFMatrix RFMatrix::compose_affine(const Rational& a, const Rational& b) const {
  RFMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r.at(i, j) = at(i, j).compose_affine(a, b);
  return r;
}

RFMatrix RFMatrix::scale(const RationalFunction& f) const {
  RFMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r.at(i, j) = at(i, j) * f;
  return r;
}

RFMatrix RFMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("RFMatrix::inverse: not square");
  const int d = rows_;
  RFMatrix a = *this, inv = RFMatrix::identity(d);
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int r = col; r < d; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("RFMatrix::inverse: singular matrix");
    if (piv != col)
      for (int j = 0; j < d; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    const RationalFunction f = a.at(col, col).inverse();
    for (int j = 0; j < d; ++j) {
      if (!a.at(col, j).is_zero()) a.at(col, j) *= f;
      if (!inv.at(col, j).is_zero()) inv.at(col, j) *= f;
    }
    for (int r = 0; r < d; ++r) {
      if (r == col) continue;
      const RationalFunction g = a.at(r, col);
      if (g.is_zero()) continue;
      for (int j = 0; j < d; ++j) {
        if (!a.at(col, j).is_zero()) a.at(r, j) -= g * a.at(col, j);
        if (!inv.at(col, j).is_zero()) inv.at(r, j) -= g * inv.at(col, j);
      }
    }
  }
  return inv;
}

RFMatrix kron(const RFMatrix& a, const RFMatrix& b) {
  RFMatrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int p = 0; p < b.rows_; ++p)
        for (int q = 0; q < b.cols_; ++q) {
          if (b.at(p, q).is_zero()) continue;
          r.at(i * b.rows_ + p, j * b.cols_ + q) = a.at(i, j) * b.at(p, q);
        }
    }
  return r;
}

FiniteModule trivial_module(int n) {
  FiniteModule m;
  m.n = n;
  m.dim = 1;
  m.blocks.assign(size_t(n) * n, RFMatrix(1, 1));
  for (int i = 0; i < n; ++i) m.block(i, i).at(0, 0) = RationalFunction(Rational(1));
  return m;
}

namespace {

const RationalFunction kInvU = RationalFunction(Polynomial(1), Polynomial::variable());

FiniteModule evaluation_from_gl(int n, const std::vector<RFMatrix>& e) {
  FiniteModule m;
  m.n = n;
  m.dim = e[0].rows();
  m.blocks.assign(size_t(n) * n, RFMatrix(m.dim, m.dim));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RFMatrix blk = e[size_t(i) * n + j].scale(kInvU);
      if (i == j) blk += RFMatrix::identity(m.dim);
      m.block(i, j) = std::move(blk);
    }
  return m;
}

}  // namespace

FiniteModule evaluation_module(const Rational& alpha, const Rational& beta) {
  const Rational diff = alpha - beta;
  if (!diff.is_integer() || diff.sign() < 0)
    throw std::invalid_argument("evaluation_module: alpha - beta must be a nonnegative integer");
  const long md = diff.num().get_si();
  const int d = static_cast<int>(md) + 1;

  // Weight basis v_0..v_m: E11 v_s = (alpha-s) v_s, E22 v_s = (beta+s) v_s,
  // E21 v_s = v_{s+1}, E12 v_s = s(m-s+1) v_{s-1}.
  std::vector<RFMatrix> e(4, RFMatrix(d, d));
  for (int s = 0; s < d; ++s) {
    e[0].at(s, s) = RationalFunction(alpha - Rational(s));
    e[3].at(s, s) = RationalFunction(beta + Rational(s));
    if (s + 1 < d) e[2].at(s + 1, s) = RationalFunction(Rational(1));
    if (s > 0) e[1].at(s - 1, s) = RationalFunction(Rational(s) * Rational(md - s + 1));
  }
  return evaluation_from_gl(2, e);
}

FiniteModule vector_evaluation_module(int n) {
  std::vector<RFMatrix> e(size_t(n) * n, RFMatrix(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e[size_t(i) * n + j].at(i, j) = RationalFunction(Rational(1));
  return evaluation_from_gl(n, e);
}

FiniteModule tensor_module(const FiniteModule& m1, const FiniteModule& m2) {
  if (m1.n != m2.n) throw std::invalid_argument("tensor_module: mismatched n");
  if (m1.b_module || m2.b_module)
    throw std::invalid_argument("tensor_module: expects Yangian modules");
  const int n = m1.n;
  FiniteModule m;
  m.n = n;
  m.dim = m1.dim * m2.dim;
  m.blocks.assign(size_t(n) * n, RFMatrix(m.dim, m.dim));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RFMatrix acc(m.dim, m.dim);
      for (int a = 0; a < n; ++a) acc += kron(m1.block(i, a), m2.block(a, j));
      m.block(i, j) = std::move(acc);
    }
  return m;
}

FiniteModule one_dim_b_module(const Signature& sig, const Rational& gamma) {
  if (sig.l == 0)
    throw std::invalid_argument("one_dim_b_module: requires l > 0");
  FiniteModule m;
  m.n = sig.n;
  m.dim = 1;
  m.b_module = true;
  m.l = sig.l;
  m.blocks.assign(size_t(sig.n) * sig.n, RFMatrix(1, 1));
  for (int i = 1; i <= sig.n; ++i) {
    Polynomial num(std::vector<Rational>{gamma, Rational(1)});
    Polynomial den(std::vector<Rational>{-gamma, Rational(sig.eps(i))});
    m.block(i - 1, i - 1).at(0, 0) = RationalFunction(num, den);
  }
  return m;
}

namespace {

// The nd x nd block matrix of a Yangian module at argument -u, inverted, as
// blocks; plus the original blocks.
struct BlockInverse {
  std::vector<RFMatrix> t;        // blocks of T(u)
  std::vector<RFMatrix> tinv_neg; // blocks of T(-u)^{-1}
};

BlockInverse block_inverse(const FiniteModule& m) {
  const int n = m.n, d = m.dim;
  RFMatrix big(n * d, n * d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const RFMatrix neg = m.block(i, j).compose_affine(Rational(-1), Rational(0));
      for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) big.at(i * d + p, j * d + q) = neg.at(p, q);
    }
  RFMatrix biginv = big.inverse();
  BlockInverse out;
  out.t.reserve(size_t(n) * n);
  out.tinv_neg.reserve(size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      out.t.push_back(m.block(i, j));
      RFMatrix blk(d, d);
      for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) blk.at(p, q) = biginv.at(i * d + p, j * d + q);
      out.tinv_neg.push_back(std::move(blk));
    }
  return out;
}

}  // namespace

FiniteModule restrict_to_b(const FiniteModule& m, int l) {
  if (m.b_module) throw std::invalid_argument("restrict_to_b: already a B-module");
  const Signature sig(m.n, l);
  const int n = m.n;
  BlockInverse bi = block_inverse(m);
  FiniteModule out;
  out.n = n;
  out.dim = m.dim;
  out.b_module = true;
  out.l = l;
  out.blocks.assign(size_t(n) * n, RFMatrix(m.dim, m.dim));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RFMatrix acc(m.dim, m.dim);
      for (int a = 0; a < n; ++a) {
        RFMatrix term = bi.t[size_t(i) * n + a] * bi.tinv_neg[size_t(a) * n + j];
        if (sig.eps(a + 1) < 0) term = term.scale(RationalFunction(Rational(-1)));
        acc += term;
      }
      out.block(i, j) = std::move(acc);
    }
  return out;
}

FiniteModule b_tensor_module(const FiniteModule& yangian_mod, const FiniteModule& b_mod) {
  if (yangian_mod.b_module || !b_mod.b_module)
    throw std::invalid_argument("b_tensor_module: expects (Yangian, B) pair");
  if (yangian_mod.n != b_mod.n) throw std::invalid_argument("b_tensor_module: mismatched n");
  const int n = yangian_mod.n;
  BlockInverse bi = block_inverse(yangian_mod);
  FiniteModule out;
  out.n = n;
  out.dim = yangian_mod.dim * b_mod.dim;
  out.b_module = true;
  out.l = b_mod.l;
  out.blocks.assign(size_t(n) * n, RFMatrix(out.dim, out.dim));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RFMatrix acc(out.dim, out.dim);
      for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
          if (b_mod.block(a, c).is_zero()) continue;
          acc += kron(bi.t[size_t(i) * n + a] * bi.tinv_neg[size_t(c) * n + j],
                      b_mod.block(a, c));
        }
      out.block(i, j) = std::move(acc);
    }
  return out;
}

bool unitarity_exact(const FiniteModule& m) {
  if (!m.b_module) throw std::invalid_argument("unitarity_exact: expects a B-module");
  const int n = m.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RFMatrix acc(m.dim, m.dim);
      for (int a = 0; a < n; ++a)
        acc += m.block(i, a) * m.block(a, j).compose_affine(Rational(-1), Rational(0));
      if (i == j ? !acc.is_identity() : !acc.is_zero()) return false;
    }
  return true;
}

namespace {

// Stack the coefficient matrices of the denominator-cleared block.
void append_constraints(const RFMatrix& blk, std::vector<std::vector<Rational>>& rows) {
  const int d = blk.rows();
  Polynomial lcm(Rational(1));
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) {
      if (blk.at(p, q).is_zero()) continue;
      const Polynomial& den = blk.at(p, q).den();
      lcm = lcm * den.exact_div(gcd_monic(lcm, den));
    }
  int max_deg = 0;
  std::vector<std::vector<Polynomial>> cleared(d, std::vector<Polynomial>(d));
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) {
      if (blk.at(p, q).is_zero()) continue;
      cleared[p][q] = blk.at(p, q).num() * lcm.exact_div(blk.at(p, q).den());
      if (!cleared[p][q].is_zero()) max_deg = std::max(max_deg, cleared[p][q].degree());
    }
  for (int s = 0; s <= max_deg; ++s)
    for (int p = 0; p < d; ++p) {
      std::vector<Rational> row(d);
      bool nonzero = false;
      for (int q = 0; q < d; ++q) {
        row[q] = cleared[p][q].coeff(s);
        nonzero = nonzero || !row[q].is_zero();
      }
      if (nonzero) rows.push_back(std::move(row));
    }
}

std::vector<Rational> primitive_vector(const std::vector<Rational>& v) {
  mpz_class den_lcm = 1;
  for (const auto& x : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.den().get_mpz_t());
  std::vector<mpz_class> ints(v.size());
  mpz_class content = 0;
  for (size_t k = 0; k < v.size(); ++k) {
    ints[k] = v[k].num() * (den_lcm / v[k].den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints[k].get_mpz_t());
  }
  int lead_sign = 0;
  for (const auto& x : ints)
    if (x != 0) {
      lead_sign = sgn(x);
      break;
    }
  std::vector<Rational> out(v.size());
  for (size_t k = 0; k < v.size(); ++k)
    out[k] = Rational(mpq_class(ints[k] * lead_sign / content));
  return out;
}

}  // namespace

HighestVectorResult highest_vector(const FiniteModule& m) {
  HighestVectorResult res;
  std::vector<std::vector<Rational>> rows;
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j) append_constraints(m.block(i, j), rows);

  std::vector<std::vector<Rational>> kernel;
  if (rows.empty()) {
    for (int c = 0; c < m.dim; ++c) {
      std::vector<Rational> v(m.dim);
      v[c] = Rational(1);
      kernel.push_back(std::move(v));
    }
  } else {
    QMatrix stack(static_cast<int>(rows.size()), m.dim);
    for (size_t r = 0; r < rows.size(); ++r)
      for (int c = 0; c < m.dim; ++c) stack.at(static_cast<int>(r), c) = rows[r][c];
    kernel = stack.kernel();
  }
  res.kernel_dim = static_cast<int>(kernel.size());
  if (res.kernel_dim != 1) return res;

  res.xi = primitive_vector(kernel[0]);
  size_t pivot = 0;
  while (pivot < res.xi.size() && res.xi[pivot].is_zero()) ++pivot;

  res.eigen_ok = true;
  for (int i = 0; i < m.n && res.eigen_ok; ++i) {
    const RFMatrix& blk = m.block(i, i);
    std::vector<RationalFunction> w(m.dim);
    for (int p = 0; p < m.dim; ++p)
      for (int q = 0; q < m.dim; ++q) {
        if (blk.at(p, q).is_zero() || res.xi[q].is_zero()) continue;
        w[p] += blk.at(p, q) * RationalFunction(res.xi[q]);
      }
    RationalFunction mu = w[pivot] / RationalFunction(res.xi[pivot]);
    for (int p = 0; p < m.dim && res.eigen_ok; ++p)
      if (w[p] != mu * RationalFunction(res.xi[p])) res.eigen_ok = false;
    res.weight.push_back(std::move(mu));
  }
  if (!res.eigen_ok) res.weight.clear();
  return res;
}

std::vector<RationalFunction> predicted_mu(const std::vector<RationalFunction>& lambda,
                                           const Signature& sig,
                                           const std::optional<Rational>& gamma) {
  const int n = sig.n, l = sig.l, k = sig.k();
  if (static_cast<int>(lambda.size()) != n)
    throw std::invalid_argument("predicted_mu: weight size mismatch");
  for (const auto& li : lambda)
    if (li.limit_at_infinity() != Rational(1))
      throw std::invalid_argument("predicted_mu: lambda components must tend to 1");
  if (gamma && l == 0)
    throw std::invalid_argument("predicted_mu: gamma only meaningful for l > 0");

  const RationalFunction two_u(
      Polynomial(std::vector<Rational>{Rational(0), Rational(2)}));
  std::vector<RationalFunction> mu(n);
  mu[n - 1] = lambda[n - 1] / lambda[n - 1].neg_u();
  if (l > 0) mu[n - 1] = -mu[n - 1];

  std::vector<RationalFunction> mut(n);  // mu-tilde, 0-based: mut[i-1]
  mut[n - 1] = two_u * mu[n - 1];
  for (int i = n - 1; i >= 1; --i) {
    RationalFunction ratio;
    if (l > 0 && i == k) {
      const Rational g = gamma.value_or(Rational(l));
      // (g-u)/(g+u-l) * lambda_k(u) lambda_{k+1}(-u+l) /
      //                 (lambda_{k+1}(u) lambda_k(-u+l))
      RationalFunction gfac(
          Polynomial(std::vector<Rational>{g, Rational(-1)}),
          Polynomial(std::vector<Rational>{g - Rational(l), Rational(1)}));
      ratio = gfac * lambda[i - 1] * lambda[i].compose_affine(Rational(-1), Rational(l)) /
              (lambda[i] * lambda[i - 1].compose_affine(Rational(-1), Rational(l)));
    } else {
      const Rational c(n - i);
      ratio = lambda[i - 1] * lambda[i].compose_affine(Rational(-1), c) /
              (lambda[i] * lambda[i - 1].compose_affine(Rational(-1), c));
    }
    mut[i - 1] = ratio * mut[i];
  }
  for (int i = n - 1; i >= 1; --i) {
    RationalFunction rest;
    for (int a = i; a < n; ++a) rest += mu[a];
    RationalFunction denom(
        Polynomial(std::vector<Rational>{Rational(i - n), Rational(2)}));  // 2u - n + i
    mu[i - 1] = (mut[i - 1] - rest) / denom;
  }
  return mu;
}

std::vector<RationalFunction> tprime_highest_eigenvalues(
    const std::vector<RationalFunction>& lambda, int n) {
  if (static_cast<int>(lambda.size()) != n)
    throw std::invalid_argument("tprime_highest_eigenvalues: weight size mismatch");
  std::vector<RationalFunction> out(n);
  for (int i = 1; i <= n; ++i) {
    RationalFunction num(Rational(1)), den(Rational(1));
    for (int m = i + 1; m <= n; ++m)
      num *= lambda[m - 1].compose_affine(Rational(1), Rational(n + 1 - m));
    for (int m = i; m <= n; ++m)
      den *= lambda[m - 1].compose_affine(Rational(1), Rational(n - m));
    out[i - 1] = num / den;
  }
  return out;
}

CyclicSpanResult cyclic_span(const FiniteModule& m, const std::vector<Rational>& xi) {
  bool xi_nonzero = false;
  for (const auto& x : xi) xi_nonzero = xi_nonzero || !x.is_zero();
  if (!xi_nonzero || static_cast<int>(xi.size()) != m.dim)
    throw std::invalid_argument("cyclic_span: bad start vector");

  // Generators: coefficient matrices of every block after clearing the
  // global least common denominator.
  Polynomial lcm(Rational(1));
  for (const auto& blk : m.blocks)
    for (int p = 0; p < m.dim; ++p)
      for (int q = 0; q < m.dim; ++q) {
        if (blk.at(p, q).is_zero()) continue;
        const Polynomial& den = blk.at(p, q).den();
        lcm = lcm * den.exact_div(gcd_monic(lcm, den));
      }
  std::vector<QMatrix> gens;
  for (const auto& blk : m.blocks) {
    int max_deg = 0;
    std::vector<std::vector<Polynomial>> cleared(m.dim, std::vector<Polynomial>(m.dim));
    bool any = false;
    for (int p = 0; p < m.dim; ++p)
      for (int q = 0; q < m.dim; ++q) {
        if (blk.at(p, q).is_zero()) continue;
        cleared[p][q] = blk.at(p, q).num() * lcm.exact_div(blk.at(p, q).den());
        if (!cleared[p][q].is_zero()) {
          max_deg = std::max(max_deg, cleared[p][q].degree());
          any = true;
        }
      }
    if (!any) continue;
    for (int s = 0; s <= max_deg; ++s) {
      QMatrix g(m.dim, m.dim);
      bool nz = false;
      for (int p = 0; p < m.dim; ++p)
        for (int q = 0; q < m.dim; ++q) {
          g.at(p, q) = cleared[p][q].coeff(s);
          nz = nz || !g.at(p, q).is_zero();
        }
      if (nz) gens.push_back(std::move(g));
    }
  }

  RowSpace span(m.dim);
  span.insert(xi);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Rational>> current = span.rows();
    for (const auto& g : gens)
      for (const auto& v : current) {
        std::vector<Rational> w(m.dim);
        for (int p = 0; p < m.dim; ++p)
          for (int q = 0; q < m.dim; ++q)
            if (!g.at(p, q).is_zero() && !v[q].is_zero()) w[p] += g.at(p, q) * v[q];
        if (span.insert(std::move(w))) grew = true;
      }
  }
  CyclicSpanResult res;
  res.dim = span.dim();
  res.basis = span.rows();
  return res;
}

}  // namespace yr
