#include "doctest.h"

#include "modular/named_series.hpp"
#include "ring/error.hpp"
#include "ring/linalg.hpp"
#include "ring/qseries.hpp"
#include "ring/ylaurent.hpp"

using namespace refsev;

namespace {

YLaurent y_pow(int dexp) { return YLaurent::monomial(1, dexp); }

// Agreement below q^n.
bool agree_below(const QSeries& a, const QSeries& b, int n) {
  return !a.truncated(n).first_difference(b.truncated(n)).has_value();
}

// 1 + y q + (y + 2) q^2 + ... + (y + n) q^n, mod q^k.
QSeries sample_series(int k) {
  return QSeries::generate(0, k, [](int n) { return n == 0 ? YLaurent(1) : y_pow(2) + YLaurent(n); });
}

}  // namespace

TEST_CASE("quantum numbers") {
  CHECK(qnum(1) == YLaurent(1));
  CHECK(qnum(2) == y_pow(1) + y_pow(-1));
  CHECK(qnum(3) == y_pow(2) + YLaurent(1) + y_pow(-2));
  CHECK(qnum(2) * qnum(2) == y_pow(2) + YLaurent(2) + y_pow(-2));
  for (int n = 1; n <= 7; ++n) {
    CHECK(qnum(n).eval_at_one() == n);
    CHECK(qnum_at_one(n) == n);
    CHECK(Rational(qnum_at_minus_one(n)) == qnum(n).eval_at_minus_one_via_sqrt_i());
    CHECK(qnum(n).reflected() == qnum(n));
  }
  CHECK(qnum_at_minus_one(2) == 0);
  CHECK(qnum_at_minus_one(3) == -1);
}

TEST_CASE("Laurent arithmetic is exact and canonical") {
  const YLaurent a = y_pow(2) + make_rational(1, 3);
  const YLaurent b = y_pow(-2) - make_rational(1, 3);
  CHECK((a + b) == y_pow(2) + y_pow(-2));
  CHECK((a - a).is_zero());
  CHECK(a * b == YLaurent(1) - make_rational(1, 3) * y_pow(2) + make_rational(1, 3) * y_pow(-2) -
                     make_rational(1, 9));
  CHECK((y_pow(2) * y_pow(-2)) == YLaurent(1));
  CHECK(a.pow(3) == a * a * a);
  CHECK((a * b).divide_exact(b) == a);
  CHECK(YLaurent(0).is_zero());
  CHECK(y_pow(3).min_dexp() == 3);
  CHECK((y_pow(2) + y_pow(-4)).max_dexp() == 2);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/2") == make_rational(3, 2));
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_rational("4/6") == make_rational(2, 3));
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
}

TEST_CASE("exp and log are inverse") {
  const int k = 12;
  const QSeries s = sample_series(k);
  CHECK(agree_below(s.log().exp(), s, k));
  const QSeries t = QSeries::generate(1, k, [](int n) { return YLaurent(n) * y_pow(n % 3); });
  CHECK(agree_below(t.exp().log(), t, k));
  CHECK(agree_below((s * s).log(), s.log() + s.log(), k));
  CHECK_THROWS_AS(t.log(), Error);
}

TEST_CASE("rational powers") {
  const int k = 10;
  const QSeries s = sample_series(k);
  const QSeries half = s.pow(make_rational(1, 2));
  CHECK(agree_below(half * half, s, k));
  CHECK(agree_below(s.pow(Rational(3)), s * s * s, k));
  CHECK(agree_below(s.pow(Rational(-1)) * s, QSeries::constant(1), k));
  const QSeries third = s.pow(make_rational(1, 3));
  CHECK(agree_below(third * third * third, s, k));
}

TEST_CASE("composition and compositional inverse") {
  const int k = 10;
  const QSeries g = QSeries::generate(1, k, [](int n) { return n == 1 ? YLaurent(1) : y_pow(2 * n - 2) + YLaurent(1); });
  const QSeries inv = g.compose_inverse();
  const QSeries q = QSeries::monomial(1, 1);
  CHECK(agree_below(g.compose(inv), q, k));
  CHECK(agree_below(inv.compose(g), q, k));
  const QSeries s = sample_series(k);
  CHECK(agree_below(s.compose(g).compose(inv), s, k - 1));
  CHECK(agree_below((s * s).compose(g), s.compose(g) * s.compose(g), k));
}

TEST_CASE("truncation is tracked") {
  const QSeries s = sample_series(5);
  CHECK(s.trunc() == 5);
  CHECK_FALSE(s.exact());
  CHECK((s * s).trunc() == 5);
  CHECK_THROWS_AS(s.coeff(5), Error);
  CHECK(QSeries::constant(3).exact());
}

TEST_CASE("eta and Delta coefficients") {
  // Euler's pentagonal number theorem and Ramanujan's tau.
  const QSeries e = eta(16);
  CHECK(e.offset24() == 1);
  const long pentagonal[16] = {1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1};
  for (int n = 0; n < 16; ++n) CHECK(e.coeff(n) == YLaurent(pentagonal[n]));
  const QSeries d = discriminant(8);
  const long tau[7] = {1, -24, 252, -1472, 4830, -6048, -16744};
  for (int n = 1; n <= 7; ++n) CHECK(d.coeff(n) == YLaurent(tau[n - 1]));
}

TEST_CASE("Eisenstein series") {
  // G_4 = 1/240 + sum sigma_3(n) q^n, G_2 = -1/24 + sum sigma_1(n) q^n.
  const QSeries g4 = eisenstein(4, 6);
  CHECK(g4.coeff(0) == YLaurent(make_rational(1, 240)));
  const long sigma3[5] = {1, 9, 28, 73, 126};
  for (int n = 1; n <= 5; ++n) CHECK(g4.coeff(n) == YLaurent(sigma3[n - 1]));
  const QSeries g2 = eisenstein(2, 6);
  CHECK(g2.coeff(0) == YLaurent(make_rational(-1, 24)));
  const long sigma1[5] = {1, 3, 4, 7, 6};
  for (int n = 1; n <= 5; ++n) CHECK(g2.coeff(n) == YLaurent(sigma1[n - 1]));
}

TEST_CASE("exact linear algebra") {
  const RationalMatrix a{{1, 2}, {3, 4}, {5, 6}};
  const std::vector<YLaurent> b{YLaurent(5), YLaurent(11), YLaurent(17)};
  const auto x = solve_exact(a, b);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == YLaurent(1));
  CHECK((*x)[1] == YLaurent(2));
  CHECK_FALSE(solve_exact(a, {YLaurent(5), YLaurent(11), YLaurent(18)}).has_value());
  CHECK_THROWS_AS(solve_exact({{1, 2}, {2, 4}}, {YLaurent(1), YLaurent(2)}), Error);
  CHECK(rank({{1, 2}, {2, 4}}) == 1);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(factorial(10) == 3628800);
}
