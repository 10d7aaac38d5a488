#include "yr/yangian.hpp"

#include <algorithm>
#include <numeric>

namespace yr {

MatrixSeries t_matrix(int n, int order) {
  MatrixSeries t(n, order);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      TruncatedSeries s(order);
      if (i == j) s.coeff(0) = NCPolynomial(Rational(1));
      for (int r = 1; r <= order; ++r) s.coeff(r) = NCPolynomial::generator(i + 1, j + 1, r);
      t.at(i, j) = std::move(s);
    }
  return t;
}

MatrixSeries t_inverse(int n, int order) { return t_matrix(n, order).inverse(); }

TruncatedSeries qdet(int n, int order) {
  // Columns m = 1..n carry arguments u - m + 1.
  MatrixSeries t = t_matrix(n, order);
  std::vector<std::vector<TruncatedSeries>> shifted(
      n, std::vector<TruncatedSeries>(n, TruncatedSeries(order)));
  for (int col = 0; col < n; ++col)
    for (int row = 0; row < n; ++row) shifted[row][col] = t.at(row, col).shift(Rational(-col));

  TruncatedSeries acc(order);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    TruncatedSeries prod = shifted[p[0]][0];
    for (int col = 1; col < n; ++col) prod = prod * shifted[p[col]][col];
    prod.scale(Rational(perm_sign(p)));
    acc += prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return acc;
}

TruncatedSeries qdet_submatrix(int n, int order, const std::vector<int>& rows,
                               const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("qdet_submatrix: shape");
  const int m = static_cast<int>(rows.size());
  MatrixSeries t = t_matrix(n, order);
  TruncatedSeries acc(order);
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  do {
    TruncatedSeries prod = TruncatedSeries::one(order);
    for (int col = 0; col < m; ++col)
      prod = prod * t.at(rows[p[col]] - 1, cols[col] - 1).shift(Rational(-col));
    prod.scale(Rational(perm_sign(p)));
    acc += prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return acc;
}

TruncatedSeries qdet_via_antisymmetrizer(int n, int order) {
  // Row (1,2,...,n) of A_n T_1(u) ... T_n(u-n+1); the matching entry of the
  // right-hand side A_n qdet is qdet itself because the diagonal
  // antisymmetrizer entry at that multi-index is 1.
  const QMatrix a = antisymmetrizer(n);
  std::vector<int> ref(n);
  std::iota(ref.begin(), ref.end(), 0);
  const int ref_idx = tensor_encode(n, ref);
  SeriesVec v = series_row(a, ref_idx, order);
  MatrixSeries t = t_matrix(n, order);
  for (int leg = 0; leg < n; ++leg) v = apply_leg_series(v, n, n, leg, t.shift(Rational(-leg)));
  return v[ref_idx];
}

MatrixSeries quantum_comatrix(int n, int order) {
  TruncatedSeries d = qdet(n, order);
  MatrixSeries tsh = t_matrix(n, order).shift(Rational(-(n - 1)));
  MatrixSeries inv = tsh.inverse();
  MatrixSeries out(n, order);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = d * inv.at(i, j);
  return out;
}

void TensorNC::add(const Word& left, const Word& right, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, ins] = t_.try_emplace(std::make_pair(left, right), c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

void TensorNC::add_product(const NCPolynomial& left, const NCPolynomial& right,
                           const Rational& scale) {
  if (scale.is_zero()) return;
  for (const auto& [wl, cl] : left.terms())
    for (const auto& [wr, cr] : right.terms()) add(wl, wr, scale * cl * cr);
}

TensorNC& TensorNC::operator+=(const TensorNC& o) {
  for (const auto& [k, c] : o.t_) add(k.first, k.second, c);
  return *this;
}

TensorNC& TensorNC::scale(const Rational& s) {
  if (s.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [k, c] : t_) c *= s;
  return *this;
}

TensorNC tensor_mul(const TensorNC& a, const TensorNC& b) {
  TensorNC out;
  std::map<std::pair<Word, Word>, NCPolynomial> memo;
  auto normal_concat = [&](const Word& x, const Word& y) -> const NCPolynomial& {
    auto key = std::make_pair(x, y);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Word w = x;
    w.insert(w.end(), y.begin(), y.end());
    RawTerms raw;
    raw.emplace_back(std::move(w), Rational(1));
    return memo.emplace(std::move(key), pbw_normalize(std::move(raw))).first->second;
  };
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms())
      out.add_product(normal_concat(ka.first, kb.first), normal_concat(ka.second, kb.second),
                      ca * cb);
  return out;
}

TensorNC coproduct_generator(int n, int i, int j, int r) {
  TensorNC out;
  for (int p = 0; p <= r; ++p) {
    const int q = r - p;
    if (p == 0 && q == 0) continue;
    if (p == 0) {
      out.add(Word{}, Word{gen_key(i, j, q)}, Rational(1));
    } else if (q == 0) {
      out.add(Word{gen_key(i, j, p)}, Word{}, Rational(1));
    } else {
      for (int a = 1; a <= n; ++a)
        out.add(Word{gen_key(i, a, p)}, Word{gen_key(a, j, q)}, Rational(1));
    }
  }
  return out;
}

TensorNC coproduct(const NCPolynomial& x, int n) {
  TensorNC out;
  for (const auto& [w, c] : x.terms()) {
    TensorNC prod = TensorNC::unit();
    for (GenKey g : w)
      prod = tensor_mul(prod, coproduct_generator(n, gen_i(g), gen_j(g), gen_r(g)));
    prod.scale(c);
    out += prod;
  }
  return out;
}

bool is_central(const NCPolynomial& x, int n, int max_mode,
                std::optional<CentralityWitness>* witness) {
  for (int r = 1; r <= max_mode; ++r)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (!commutator(x, NCPolynomial::generator(i, j, r)).is_zero()) {
          if (witness) *witness = CentralityWitness{i, j, r};
          return false;
        }
      }
  return true;
}

bool is_central_series(const TruncatedSeries& s, int n,
                       std::optional<CentralityWitness>* witness) {
  for (int m = 1; m <= s.order(); ++m) {
    if (s.coeff(m).is_zero()) continue;
    if (!is_central(s.coeff(m), n, s.order() - m, witness)) return false;
  }
  return true;
}

BivariateResidual rtt_residual_for(const MatrixSeries& t, int n) {
  const int order = t.order();
  const QMatrix p = swap_operator(n, 2, 0, 1);
  QMatrix negp = p;
  negp.scale(Rational(-1));
  TwoLegExpr rbar = TwoLegExpr::linear_uv(n, Rational(1), Rational(-1), negp);
  TwoLegExpr t1 = TwoLegExpr::series_leg1(n);
  TwoLegExpr t2 = TwoLegExpr::series_leg2(n);
  TwoLegExpr lhs = rbar * t1 * t2;
  TwoLegExpr rhs = t2 * t1 * rbar;
  PairProductCache cache(t);
  return two_leg_residual(lhs, rhs, cache, 1 - order, 1);
}

BivariateResidual rtt_residual(int n, int order) {
  MatrixSeries t = t_matrix(n, order);
  return rtt_residual_for(t, n);
}

bool ttprime_relation_check_for(const MatrixSeries& t, const MatrixSeries& tinv, int n) {
  const int order = t.order();
  using Biv = std::map<std::pair<int, int>, NCPolynomial>;
  auto biv_add = [](Biv& m, int eu, int ev, const NCPolynomial& p, const Rational& s) {
    if (p.is_zero() || s.is_zero()) return;
    auto [it, ins] = m.try_emplace(std::make_pair(eu, ev));
    it->second.add_scaled(p, s);
    if (it->second.is_zero()) m.erase(it);
  };
  auto zero_on_window = [&](const Biv& m) {
    for (const auto& [k, p] : m) {
      if (k.first < 1 - order || k.second < 1 - order) continue;
      if (!p.is_zero()) return false;
    }
    return true;
  };

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          Biv diff;
          // (u-v) [t_ij(u), t'_rs(v)]
          for (int p = 0; p <= order; ++p)
            for (int q = 0; q <= order; ++q) {
              const NCPolynomial& a = t.at(i, j).coeff(p);
              const NCPolynomial& b = tinv.at(r, s).coeff(q);
              if (a.is_zero() || b.is_zero()) continue;
              NCPolynomial comm = nc_mul(a, b);
              comm -= nc_mul(b, a);
              if (comm.is_zero()) continue;
              biv_add(diff, 1 - p, -q, comm, Rational(1));
              biv_add(diff, -p, 1 - q, comm, Rational(-1));
            }
          // minus RHS: delta_rj sum_a t_ia(u) t'_as(v) - delta_is sum_a t'_ra(v) t_aj(u)
          for (int p = 0; p <= order; ++p)
            for (int q = 0; q <= order; ++q) {
              if (r == j)
                for (int a = 0; a < n; ++a)
                  biv_add(diff, -p, -q,
                          nc_mul(t.at(i, a).coeff(p), tinv.at(a, s).coeff(q)), Rational(-1));
              if (i == s)
                for (int a = 0; a < n; ++a)
                  biv_add(diff, -p, -q,
                          nc_mul(tinv.at(r, a).coeff(q), t.at(a, j).coeff(p)), Rational(1));
            }
          if (!zero_on_window(diff)) return false;
        }
  return true;
}

bool ttprime_relation_check(int n, int order) {
  MatrixSeries t = t_matrix(n, order);
  return ttprime_relation_check_for(t, t.inverse(), n);
}

}  // namespace yr
