#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "yr/series.hpp"

using namespace yr;

namespace {

std::mt19937_64 rng(771230);
int rnd(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational random_rat() {
  int num = rnd(-5, 5);
  return Rational(num, rnd(1, 3));
}

TruncatedSeries random_scalar_series(int D, bool unit_constant) {
  TruncatedSeries s(D);
  s.coeff(0) = NCPolynomial(unit_constant ? Rational(1) : Rational(rnd(1, 3)));
  for (int m = 1; m <= D; ++m) s.coeff(m) = NCPolynomial(random_rat());
  return s;
}

TruncatedSeries random_nc_series(int n, int D) {
  TruncatedSeries s(D);
  s.coeff(0) = NCPolynomial(Rational(1));
  for (int m = 1; m <= D; ++m) {
    NCPolynomial c = NCPolynomial(random_rat());
    c += random_rat() * NCPolynomial::generator(rnd(1, n), rnd(1, n), rnd(1, m));
    s.coeff(m) = c;
  }
  return s;
}

}  // namespace

TEST_CASE("neg_u flips odd coefficients and is an involution") {
  const int D = 5;
  TruncatedSeries s(D);
  s.coeff(0) = NCPolynomial(Rational(1));
  s.coeff(1) = NCPolynomial::generator(1, 2, 1);
  TruncatedSeries t = s.neg_u();
  CHECK(t.coeff(1) == -NCPolynomial::generator(1, 2, 1));
  CHECK(t.coeff(0) == s.coeff(0));
  for (int trial = 0; trial < 20; ++trial) {
    TruncatedSeries r = random_nc_series(3, D);
    CHECK(r.neg_u().neg_u() == r);
  }
}

TEST_CASE("shift expands 1/(u+c) correctly") {
  // 1/(u-1) = sum_{m>=1} u^{-m}.
  const int D = 6;
  TruncatedSeries s(D);
  s.coeff(1) = NCPolynomial(Rational(1));
  TruncatedSeries t = s.shift(Rational(-1));
  CHECK(t.coeff(0).is_zero());
  for (int m = 1; m <= D; ++m) CHECK(t.coeff(m) == NCPolynomial(Rational(1)));

  for (int trial = 0; trial < 30; ++trial) {
    TruncatedSeries r = random_nc_series(2, D);
    Rational c = random_rat();
    CHECK(r.shift(c).shift(-c) == r);
  }
}

TEST_CASE("series inversion") {
  const int D = 6;
  CHECK(TruncatedSeries::one(D).invert() == TruncatedSeries::one(D));

  // (1 + x u^{-1})^{-1} = 1 - x u^{-1} + x^2 u^{-2} - ...
  TruncatedSeries s = TruncatedSeries::one(D);
  NCPolynomial x = NCPolynomial::generator(1, 2, 1);
  s.coeff(1) = x;
  TruncatedSeries inv = s.invert();
  NCPolynomial xm(Rational(1));
  for (int m = 0; m <= D; ++m) {
    NCPolynomial expect = xm;
    expect.scale(Rational(m % 2 ? -1 : 1));
    CHECK(inv.coeff(m) == expect);
    xm = xm * x;
  }

  for (int trial = 0; trial < 25; ++trial) {
    TruncatedSeries r = random_nc_series(2, 4);
    CHECK((r * r.invert()).is_one());
    CHECK((r.invert() * r).is_one());
  }
  TruncatedSeries bad(3);
  bad.coeff(0) = NCPolynomial::generator(1, 1, 1);
  CHECK_THROWS_AS(bad.invert(), std::domain_error);
  CHECK_THROWS_AS(TruncatedSeries(3).invert(), std::domain_error);
}

TEST_CASE("order mismatch is rejected") {
  TruncatedSeries a(3), b(4);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("matrix series inverse") {
  const int D = 4, n = 3;
  MatrixSeries id = MatrixSeries::identity(n, D);
  CHECK(id.inverse() == id);

  for (int trial = 0; trial < 10; ++trial) {
    MatrixSeries m(n, D);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        TruncatedSeries s(D);
        s.coeff(0) = NCPolynomial(Rational(i == j ? 1 : 0));
        for (int k = 1; k <= D; ++k)
          s.coeff(k) = random_rat() * NCPolynomial::generator(rnd(1, n), rnd(1, n), rnd(1, k));
        m.at(i, j) = s;
      }
    MatrixSeries inv = m.inverse();
    CHECK(m * inv == id);
    CHECK(inv * m == id);
    CHECK(inv.inverse() == m);
  }

  MatrixSeries sing(2, 2);
  sing.at(0, 0) = TruncatedSeries::one(2);  // second row zero
  CHECK_THROWS_AS(sing.inverse(), std::domain_error);
}

TEST_CASE("scalar series multiplication commutes with rational content") {
  const int D = 5;
  for (int trial = 0; trial < 20; ++trial) {
    TruncatedSeries a = random_scalar_series(D, false);
    TruncatedSeries b = random_scalar_series(D, true);
    CHECK(a * b == b * a);
  }
}
