#include "yr/bivar.hpp"

namespace yr {

TwoLegExpr TwoLegExpr::linear_uv(int n, const Rational& cu, const Rational& cv,
                                 const QMatrix& c) {
  const int dim = n * n;
  std::vector<TwoLegTerm> terms;
  if (!cu.is_zero()) {
    TwoLegTerm t;
    t.eu = 1;
    t.m = QMatrix::identity(dim);
    t.m.scale(cu);
    terms.push_back(std::move(t));
  }
  if (!cv.is_zero()) {
    TwoLegTerm t;
    t.ev = 1;
    t.m = QMatrix::identity(dim);
    t.m.scale(cv);
    terms.push_back(std::move(t));
  }
  if (!c.is_zero()) {
    TwoLegTerm t;
    t.m = c;
    terms.push_back(std::move(t));
  }
  return TwoLegExpr(n, std::move(terms));
}

namespace {

QMatrix unit_on_leg(int n, int x, int y, bool leg1) {
  // E_xy tensor I or I tensor E_xy on C^n x C^n.
  const int dim = n * n;
  QMatrix m(dim, dim);
  for (int other = 0; other < n; ++other) {
    const int row = leg1 ? x * n + other : other * n + x;
    const int col = leg1 ? y * n + other : other * n + y;
    m.at(row, col) = Rational(1);
  }
  return m;
}

}  // namespace

TwoLegExpr TwoLegExpr::series_leg1(int n) {
  std::vector<TwoLegTerm> terms;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      TwoLegTerm t;
      t.us = x * n + y;
      t.m = unit_on_leg(n, x, y, true);
      terms.push_back(std::move(t));
    }
  return TwoLegExpr(n, std::move(terms));
}

TwoLegExpr TwoLegExpr::series_leg2(int n) {
  std::vector<TwoLegTerm> terms;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      TwoLegTerm t;
      t.vs = x * n + y;
      t.m = unit_on_leg(n, x, y, false);
      terms.push_back(std::move(t));
    }
  return TwoLegExpr(n, std::move(terms));
}

TwoLegExpr operator*(const TwoLegExpr& a, const TwoLegExpr& b) {
  if (a.n() != b.n()) throw std::invalid_argument("TwoLegExpr: size mismatch");
  std::vector<TwoLegTerm> terms;
  terms.reserve(a.terms().size() * b.terms().size());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) {
      TwoLegTerm t;
      t.eu = ta.eu + tb.eu;
      t.ev = ta.ev + tb.ev;
      if (ta.us >= 0 && tb.us >= 0)
        throw std::logic_error("TwoLegExpr: two series factors in u");
      if (ta.vs >= 0 && tb.vs >= 0)
        throw std::logic_error("TwoLegExpr: two series factors in v");
      t.us = ta.us >= 0 ? ta.us : tb.us;
      t.vs = ta.vs >= 0 ? ta.vs : tb.vs;
      if (t.us >= 0 && t.vs >= 0) {
        if (ta.us >= 0 && ta.vs >= 0)
          t.v_first = ta.v_first;
        else if (tb.us >= 0 && tb.vs >= 0)
          t.v_first = tb.v_first;
        else
          t.v_first = (ta.vs >= 0);  // the v factor came first
      }
      t.m = ta.m * tb.m;
      if (!t.m.is_zero()) terms.push_back(std::move(t));
    }
  return TwoLegExpr(a.n(), std::move(terms));
}

const NCPolynomial& PairProductCache::get(int us, int p, int vs, int q, bool v_first) {
  auto coeff = [&](int slot, int ord) -> const NCPolynomial* {
    static const NCPolynomial one{Rational(1)};
    static const NCPolynomial zero{};
    if (slot < 0) return ord == 0 ? &one : &zero;
    const int n = pool_.dim();
    return &pool_.at(slot / n, slot % n).coeff(ord);
  };
  const NCPolynomial* cu = coeff(us, p);
  const NCPolynomial* cv = coeff(vs, q);
  if (cu->is_zero() || cv->is_zero()) return zero_;
  if (cu->is_scalar() || cv->is_scalar()) v_first = false;  // order irrelevant
  auto key = std::make_tuple(us, p, vs, q, v_first);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  NCPolynomial prod = v_first ? nc_mul(*cv, *cu) : nc_mul(*cu, *cv);
  return memo_.emplace(std::move(key), std::move(prod)).first->second;
}

BivariateResidual two_leg_residual(const TwoLegExpr& lhs, const TwoLegExpr& rhs,
                                   PairProductCache& cache, int lo, int hi) {
  const int n = lhs.n();
  const int dim = n * n;
  const int order = cache.pool().order();
  BivariateResidual res;
  res.lo = lo;
  res.hi = hi;

  auto accumulate = [&](const TwoLegExpr& e, const Rational& side) {
    for (const auto& t : e.terms()) {
      for (int e_u = lo; e_u <= hi; ++e_u) {
        const int p = t.eu - e_u;
        if (p < 0 || p > order) continue;
        for (int e_v = lo; e_v <= hi; ++e_v) {
          const int q = t.ev - e_v;
          if (q < 0 || q > order) continue;
          const NCPolynomial& prod = cache.get(t.us, p, t.vs, q, t.v_first);
          if (prod.is_zero()) continue;
          for (int row = 0; row < dim; ++row)
            for (int col = 0; col < dim; ++col) {
              const Rational& f = t.m.at(row, col);
              if (f.is_zero()) continue;
              std::array<int, 4> key{e_u, e_v, row, col};
              auto [it, ins] = res.entries.try_emplace(key);
              it->second.add_scaled(prod, f * side);
              if (it->second.is_zero()) res.entries.erase(it);
            }
        }
      }
    }
  };
  accumulate(lhs, Rational(1));
  accumulate(rhs, Rational(-1));
  return res;
}

}  // namespace yr
