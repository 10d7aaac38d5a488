#include "yr/classify.hpp"

#include <algorithm>

namespace yr {

std::vector<RationalFunction> mu_tilde(const std::vector<RationalFunction>& mu,
                                       const Signature& sig) {
  const int n = sig.n;
  if (static_cast<int>(mu.size()) != n) throw std::invalid_argument("mu_tilde: size mismatch");
  std::vector<RationalFunction> mut(n);
  for (int i = 1; i <= n; ++i) {
    RationalFunction lin(
        Polynomial(std::vector<Rational>{Rational(i - n), Rational(2)}));  // 2u - n + i
    RationalFunction acc = lin * mu[i - 1];
    for (int a = i + 1; a <= n; ++a) acc += mu[a - 1];
    mut[i - 1] = std::move(acc);
  }
  return mut;
}

VermaReport verma_exists(const std::vector<RationalFunction>& mu, const Signature& sig) {
  const int n = sig.n;
  VermaReport rep;
  if ((mu[n - 1] * mu[n - 1].neg_u()) != RationalFunction(Rational(1))) {
    rep.bad_index = n;
    rep.condition = "unitarity";
    return rep;
  }
  std::vector<RationalFunction> mut = mu_tilde(mu, sig);
  for (int i = 1; i <= n - 1; ++i) {
    const Rational c(n - i);
    RationalFunction lhs = mut[i - 1] * mut[i - 1].compose_affine(Rational(-1), c);
    RationalFunction rhs = mut[i] * mut[i].compose_affine(Rational(-1), c);
    if (lhs != rhs) {
      rep.bad_index = i;
      rep.condition = "interlacing";
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

std::optional<Polynomial> drinfeld_solve(const RationalFunction& r, int max_deg) {
  if (r.is_zero()) return std::nullopt;
  const Polynomial& num = r.num();
  const Polynomial& den = r.den();
  if (num.degree() != den.degree() || num.lc() != den.lc()) return std::nullopt;

  for (int d = 0; d <= max_deg; ++d) {
    // P(u+1) den - P(u) num = 0 in the coefficients of monic P of degree d.
    std::vector<Polynomial> v(d + 1);
    for (int s = 0; s <= d; ++s) {
      Polynomial us = Polynomial::monomial(s);
      v[s] = us.compose_affine(Rational(1), Rational(1)) * den - us * num;
    }
    int height = 0;
    for (const auto& p : v)
      if (!p.is_zero()) height = std::max(height, p.degree() + 1);
    if (height == 0) height = 1;
    QMatrix sys(height, d + 1);
    for (int s = 0; s <= d; ++s)
      for (int row = 0; row < height; ++row) sys.at(row, s) = v[s].coeff(row);
    for (const auto& kv : sys.kernel()) {
      if (kv[d].is_zero()) continue;  // lower-degree relation, found earlier
      std::vector<Rational> coeffs(d + 1);
      const Rational scale = kv[d].inverse();
      for (int s = 0; s <= d; ++s) coeffs[s] = kv[s] * scale;
      Polynomial p(std::move(coeffs));
      // Re-verify the functional equation before accepting.
      if (RationalFunction(p.compose_affine(Rational(1), Rational(1)), p) == r) return p;
    }
  }
  return std::nullopt;
}

bool drinfeld_symmetry_holds(const Polynomial& p, int i, int n) {
  return p.compose_affine(Rational(-1), Rational(n - i + 1)) == p;
}

bool symmetric_factor_check(const Polynomial& p, const Polynomial& q, int i, int n) {
  if (q.is_zero()) throw std::invalid_argument("symmetric_factor_check: zero Q");
  Polynomial rhs = q * q.compose_affine(Rational(-1), Rational(n - i + 1));
  if (q.degree() % 2) rhs = -rhs;
  return p == rhs;
}

namespace {

// Required degree of a solution to P(u+1)/P(u) = num/den, or -1 when the
// shape rules out any polynomial solution.
int required_degree(const Polynomial& num, const Polynomial& den) {
  Polynomial diff = num - den;
  if (diff.is_zero()) return 0;
  if (den.is_zero() || diff.degree() != den.degree() - 1) return -1;
  Rational d = diff.lc() / den.lc();
  if (!d.is_integer() || d.sign() <= 0) return -1;
  return static_cast<int>(d.num().get_si());
}

}  // namespace

ClassifyResult classify_finite_dim(const std::vector<RationalFunction>& mu,
                                   const Signature& sig, int max_deg) {
  const int n = sig.n, l = sig.l, k = sig.k();
  ClassifyResult res;
  res.verma = verma_exists(mu, sig);
  if (!res.verma.ok) {
    res.status = ClassifyStatus::VermaViolation;
    res.detail = "verma condition violated: " + res.verma.condition + " at index " +
                 std::to_string(res.verma.bad_index);
    return res;
  }

  std::vector<RationalFunction> mut = mu_tilde(mu, sig);
  res.data.polys.resize(n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    RationalFunction ratio = mut[i - 1] / mut[i];
    if (l > 0 && i == k) {
      // Extract gamma: for any valid pair, evaluating the cleared relation
      // at u = gamma and u = l - gamma forces gamma to be a root of the
      // numerator, l minus a root of the denominator, or l/2.
      std::vector<Rational> candidates = rational_roots(ratio.num());
      for (const Rational& root : rational_roots(ratio.den()))
        candidates.push_back(Rational(l) - root);
      candidates.push_back(Rational(l, 2));
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

      bool found = false;
      for (const Rational& g : candidates) {
        // Divide out (g-u)/(g+u-l) and solve for P.
        RationalFunction gfac(
            Polynomial(std::vector<Rational>{g, Rational(-1)}),
            Polynomial(std::vector<Rational>{g - Rational(l), Rational(1)}));
        if (gfac.is_zero()) continue;  // g = u identically impossible; guard
        RationalFunction reduced = ratio / gfac;
        auto p = drinfeld_solve(reduced, max_deg);
        if (!p || !drinfeld_symmetry_holds(*p, i, n) || p->eval(g).is_zero()) continue;
        if (found) throw std::logic_error("classify: ambiguous (P, gamma) pair");
        res.data.polys[i - 1] = *p;
        res.data.gamma = g;
        found = true;
      }
      if (!found) {
        res.status = ClassifyStatus::NotFiniteDimensional;
        res.failed_index = i;
        res.detail = "no admissible (P, gamma) pair at ratio index " + std::to_string(i);
        return res;
      }
    } else {
      auto p = drinfeld_solve(ratio, max_deg);
      if (!p) {
        const int need = required_degree(ratio.num(), ratio.den());
        if (need > max_deg) {
          res.status = ClassifyStatus::UndecidedAtBound;
          res.failed_index = i;
          res.detail = "ratio index " + std::to_string(i) + " needs degree " +
                       std::to_string(need) + " > bound " + std::to_string(max_deg);
        } else {
          res.status = ClassifyStatus::NotFiniteDimensional;
          res.failed_index = i;
          res.detail = "no monic P at ratio index " + std::to_string(i);
        }
        return res;
      }
      if (!drinfeld_symmetry_holds(*p, i, n)) {
        res.status = ClassifyStatus::NotFiniteDimensional;
        res.failed_index = i;
        res.detail = "symmetry P(-u+n-i+1) = P(u) fails at index " + std::to_string(i);
        return res;
      }
      res.data.polys[i - 1] = *p;
    }
  }
  res.status = ClassifyStatus::FiniteDimensional;
  return res;
}

}  // namespace yr
