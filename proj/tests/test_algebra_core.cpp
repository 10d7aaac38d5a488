#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "yr/nc.hpp"
#include "yr/polynomial.hpp"
#include "yr/ratfunc.hpp"

using namespace yr;

namespace {

NCPolynomial gen(int i, int j, int r) { return NCPolynomial::generator(i, j, r); }

std::mt19937_64 rng(20240817);

int rnd(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Word random_word(int n, int max_mode, int max_len) {
  Word w(rnd(1, max_len));
  for (auto& g : w) g = gen_key(rnd(1, n), rnd(1, n), rnd(1, max_mode));
  return w;
}

Rational random_rat() {
  int num = rnd(-6, 6);
  if (num == 0) num = 1;
  return Rational(num, rnd(1, 4));
}

// x*y = y*x + [x,y] applied at one position: the defining rewrite, valid in
// either direction.
RawTerms rewrite_once(const RawTerms& terms, size_t which, size_t pos) {
  RawTerms out;
  for (size_t t = 0; t < terms.size(); ++t) {
    if (t != which || terms[t].first.size() < 2) {
      out.push_back(terms[t]);
      continue;
    }
    const Word& w = terms[t].first;
    const Rational& c = terms[t].second;
    size_t p = pos % (w.size() - 1);
    Word sw = w;
    std::swap(sw[p], sw[p + 1]);
    out.emplace_back(std::move(sw), c);
    for (const auto& [bw, bc] : mode_bracket_terms(w[p], w[p + 1])) {
      Word nw(w.begin(), w.begin() + p);
      nw.insert(nw.end(), bw.begin(), bw.end());
      nw.insert(nw.end(), w.begin() + p + 2, w.end());
      out.emplace_back(std::move(nw), c * bc);
    }
  }
  return out;
}

// Commutative product of two sums of words: concatenate and sort.
NCPolynomial commutative_mul(const NCPolynomial& a, const NCPolynomial& b) {
  std::map<Word, Rational> out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      std::sort(w.begin(), w.end());
      auto [it, ins] = out.try_emplace(std::move(w), ca * cb);
      if (!ins) {
        it->second += ca * cb;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  return NCPolynomial::from_normal_terms(std::move(out));
}

}  // namespace

TEST_CASE("mode bracket small cases") {
  CHECK(commutator(gen(1, 1, 1), gen(2, 2, 1)).is_zero());
  NCPolynomial expect = gen(1, 1, 1) - gen(2, 2, 1);
  CHECK(commutator(gen(1, 2, 1), gen(2, 1, 1)) == expect);
  CHECK(commutator(gen(1, 2, 3), gen(1, 2, 3)).is_zero());
  CHECK(mode_bracket(gen_key(1, 2, 1), gen_key(2, 1, 1)) == expect);
}

TEST_CASE("bracket matches the series-form defining relation to order 6") {
  // Coefficient of u^{-p} v^{-q} in (u-v)[t_ij(u), t_kl(v)] must equal
  // t_kj^{(p)} t_il^{(q)} - t_kj^{(q)} t_il^{(p)} with mode 0 read as a
  // Kronecker delta. Checked for every index quadruple at n=2.
  const int D = 6;
  const int n = 2;
  auto mode = [&](int i, int j, int r) {
    return r == 0 ? NCPolynomial(Rational(i == j ? 1 : 0)) : gen(i, j, r);
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          for (int p = 0; p + 1 <= D; ++p)
            for (int q = 0; q + 1 <= D; ++q) {
              NCPolynomial lhs = commutator(mode(i, j, p + 1), mode(k, l, q));
              lhs -= commutator(mode(i, j, p), mode(k, l, q + 1));
              NCPolynomial rhs = nc_mul(mode(k, j, p), mode(i, l, q));
              rhs -= nc_mul(mode(k, j, q), mode(i, l, p));
              CHECK(lhs == rhs);
            }
}

TEST_CASE("straightening: single swap with correction") {
  RawTerms raw;
  raw.emplace_back(Word{gen_key(2, 1, 1), gen_key(1, 2, 1)}, Rational(1));
  NCPolynomial got = pbw_normalize(std::move(raw));

  RawTerms expect_raw;
  expect_raw.emplace_back(Word{gen_key(1, 2, 1), gen_key(2, 1, 1)}, Rational(1));
  NCPolynomial expect = pbw_normalize(std::move(expect_raw));
  expect -= gen(1, 1, 1);
  expect += gen(2, 2, 1);
  CHECK(got == expect);
  CHECK(got.term_count() == 3);
}

TEST_CASE("straightening: ordered words are fixed points") {
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_word(3, 4, 4);
    std::sort(w.begin(), w.end());
    RawTerms raw;
    raw.emplace_back(w, Rational(1));
    NCPolynomial p = pbw_normalize(std::move(raw));
    CHECK(p.term_count() == 1);
    CHECK(p.terms().begin()->first == w);
  }
}

TEST_CASE("canonicity: rewritten representations normalize identically") {
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = rnd(2, 3);
    RawTerms a;
    a.emplace_back(random_word(n, 4, 4), random_rat());
    RawTerms b = a;
    const int steps = rnd(1, 5);
    for (int s = 0; s < steps; ++s) b = rewrite_once(b, rnd(0, int(b.size()) - 1), rnd(0, 8));
    CHECK(pbw_normalize(std::move(a)) == pbw_normalize(std::move(b)));
  }
}

TEST_CASE("associativity of the normalized product") {
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2;
    RawTerms ra, rb, rc;
    ra.emplace_back(random_word(n, 3, 2), random_rat());
    rb.emplace_back(random_word(n, 3, 2), random_rat());
    rc.emplace_back(random_word(n, 3, 2), random_rat());
    NCPolynomial x = pbw_normalize(std::move(ra));
    NCPolynomial y = pbw_normalize(std::move(rb));
    NCPolynomial z = pbw_normalize(std::move(rc));
    CHECK(nc_mul(nc_mul(x, y), z) == nc_mul(x, nc_mul(y, z)));
  }
}

TEST_CASE("bracket antisymmetry and Jacobi identity") {
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rnd(2, 3);
    GenKey a = gen_key(rnd(1, n), rnd(1, n), rnd(1, 4));
    GenKey b = gen_key(rnd(1, n), rnd(1, n), rnd(1, 4));
    CHECK(mode_bracket(a, b) == -mode_bracket(b, a));
  }
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rnd(2, 3);
    NCPolynomial x = gen(rnd(1, n), rnd(1, n), rnd(1, 3));
    NCPolynomial y = gen(rnd(1, n), rnd(1, n), rnd(1, 3));
    NCPolynomial z = gen(rnd(1, n), rnd(1, n), rnd(1, 3));
    NCPolynomial s = commutator(commutator(x, y), z);
    s += commutator(commutator(y, z), x);
    s += commutator(commutator(z, x), y);
    CHECK(s.is_zero());
  }
}

TEST_CASE("filtration bound and commutative top part") {
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rnd(2, 3);
    RawTerms ra, rb;
    ra.emplace_back(random_word(n, 3, 3), random_rat());
    rb.emplace_back(random_word(n, 3, 3), random_rat());
    NCPolynomial x = pbw_normalize(std::move(ra));
    NCPolynomial y = pbw_normalize(std::move(rb));
    NCPolynomial xy = nc_mul(x, y);
    REQUIRE(!xy.is_zero());
    const int dx = x.filtration_degree(), dy = y.filtration_degree();
    CHECK(xy.filtration_degree() <= dx + dy);
    CHECK(xy.filtration_degree() == dx + dy);  // top parts cannot cancel here
    CHECK(xy.top_degree_part() == commutative_mul(x.top_degree_part(), y.top_degree_part()));
  }
}

TEST_CASE("rational arithmetic basics") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational("3/6").str() == "1/2");
  CHECK(Rational(-4, -6) == Rational(2, 3));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK(Rational(7).str() == "7");
  CHECK(Rational(-3, 7).str() == "-3/7");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(binom(6, 3) == Rational(20));
}

TEST_CASE("polynomial arithmetic and division") {
  Polynomial u = Polynomial::variable();
  Polynomial p = u * u - Rational(2) * u;  // u^2 - 2u
  CHECK(p.degree() == 2);
  CHECK(p.eval(Rational(3)) == Rational(3));
  CHECK(p.compose_affine(Rational(-1), Rational(2)) == p);  // p(-u+2) = p(u)
  auto [q, r] = (p * p + u).divrem(p);
  CHECK(q == p);
  CHECK(r == u);
  CHECK_THROWS_AS(p.divrem(Polynomial()), std::domain_error);
  CHECK(Polynomial().is_zero());
  CHECK_THROWS_AS(Polynomial().degree(), std::domain_error);
  CHECK(gcd_monic(p * (u - Rational(5)), p * (u + Rational(1))) == p.monic());

  auto roots = rational_roots(p * (Rational(2) * u - Rational(1)));
  CHECK(roots == std::vector<Rational>{Rational(0), Rational(1, 2), Rational(2)});
}

TEST_CASE("rational function suite") {
  RationalFunction u = RationalFunction::variable();
  const Rational g(5);
  RationalFunction f = (u + RationalFunction(g)) / (u - RationalFunction(g));
  CHECK(f.neg_u() == (u - RationalFunction(g)) / (u + RationalFunction(g)));

  for (int trial = 0; trial < 50; ++trial) {
    Polynomial num({random_rat(), random_rat(), random_rat()});
    Polynomial den({random_rat(), random_rat()});
    if (num.is_zero() || den.is_zero()) continue;
    RationalFunction h(num, den);
    CHECK((h * h.inverse()).is_one());
    CHECK((h / h).is_one());
  }

  RationalFunction w(Polynomial(std::vector<Rational>{Rational(0), Rational(2)}),
                     Polynomial(std::vector<Rational>{Rational(-1), Rational(2)}));
  CHECK(w.evaluate(Rational(1)) == Rational(2));
  CHECK(w.limit_at_infinity() == Rational(1));
  CHECK_THROWS_AS(w.evaluate(Rational(1, 2)), std::domain_error);
  CHECK_THROWS_AS(RationalFunction(Rational(0)).inverse(), std::domain_error);
  CHECK_THROWS_AS(w.inverse().evaluate(Rational(0)), std::domain_error);

  // 2u/(2u-1) = 1 + (1/2)u^{-1} + (1/4)u^{-2} + ...
  auto exp = w.expand_at_infinity(4);
  CHECK(exp[0] == Rational(1));
  CHECK(exp[1] == Rational(1, 2));
  CHECK(exp[2] == Rational(1, 4));
  CHECK(exp[3] == Rational(1, 8));
}
