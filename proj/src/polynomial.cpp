#include "yr/polynomial.hpp"

#include <map>
#include <sstream>

namespace yr {

Polynomial gcd_monic(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divrem(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    Rational ac = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    const bool unit = ac.is_one() && k > 0;
    if (!unit) os << ac.str();
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

namespace {

// Positive divisors by trial division. Inputs stay desk-scale in this
// code base; bail out rather than loop on huge values.
std::vector<mpz_class> divisors(mpz_class v) {
  if (v < 0) v = -v;
  if (v == 0 || v > mpz_class(1000000000000L))
    throw std::runtime_error("rational_roots: coefficient too large for root search");
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      small.push_back(d);
      if (d * d != v) large.push_back(v / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
  std::vector<Rational> roots;
  // Strip powers of u.
  std::vector<Rational> c = p.coeffs();
  size_t low = 0;
  while (low < c.size() && c[low].is_zero()) ++low;
  if (low > 0) roots.push_back(Rational(0));
  c.erase(c.begin(), c.begin() + low);
  if (c.size() <= 1) return roots;

  // Clear denominators and content to an integer primitive polynomial.
  mpz_class den_lcm = 1;
  for (const auto& x : c) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.den().get_mpz_t());
  std::vector<mpz_class> ic(c.size());
  for (size_t k = 0; k < c.size(); ++k) ic[k] = c[k].num() * (den_lcm / c[k].den());
  mpz_class content = 0;
  for (const auto& x : ic) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
  for (auto& x : ic) x /= content;

  for (const auto& pn : divisors(ic.front()))
    for (const auto& qd : divisors(ic.back()))
      for (int s : {1, -1}) {
        Rational cand(mpq_class(s * pn, qd));
        if (p.eval(cand).is_zero()) roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace yr
