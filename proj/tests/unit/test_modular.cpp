#include "doctest.h"

#include "modular/identities.hpp"
#include "modular/named_series.hpp"
#include "modular/tables.hpp"
#include "ring/error.hpp"
#include "verify/reform.hpp"

using namespace refsev;

namespace {

YLaurent y_pow(int dexp) { return YLaurent::monomial(1, dexp); }

bool agree_below(const QSeries& a, const QSeries& b, int n) {
  return !a.truncated(n).first_difference(b.truncated(n)).has_value();
}

}  // namespace

TEST_CASE("DG~2 from its divisor-sum definition") {
  const int k = 9;
  const QSeries s = dg2_tilde(k);
  for (int n = 1; n < k; ++n) {
    YLaurent want;
    for (int d = 1; d <= n; ++d) {
      if (n % d == 0) want += qnum(d) * qnum(d) * Rational(n / d);
    }
    CHECK(s.coeff(n) == want);
  }
  CHECK(s.coeff(0).is_zero());
  CHECK(agree_below(ddg2_tilde(k), s.d_q(), k));
}

TEST_CASE("theta2(q^2) coefficients") {
  // sum_n (-1)^n q^(n^2) over all integers n.
  const QSeries t = theta2_q2(17);
  for (int n = 0; n < 17; ++n) {
    long want = 0;
    if (n == 0) want = 1;
    for (int r = 1; r * r <= n; ++r) {
      if (r * r == n) want = r % 2 ? -2 : 2;
    }
    CHECK(t.coeff(n) == YLaurent(want));
  }
}

TEST_CASE("embedded tables carry the printed leading terms") {
  const QSeries b1 = embedded_table(Table::kB1);
  CHECK(b1.trunc() == 18);
  CHECK(b1.coeff(0) == YLaurent(1));
  CHECK(b1.coeff(1) == YLaurent(-1));
  CHECK(b1.coeff(2) == -(y_pow(2) + YLaurent(3) + y_pow(-2)));
  CHECK(b1.coeff(3) == y_pow(4) + YLaurent(10) * y_pow(2) + YLaurent(17) + YLaurent(10) * y_pow(-2) + y_pow(-4));

  // B2 = (1 + 3q - (3y + 1 + 3/y) q^2 + ...) / ((1 - yq)(1 - q/y)).
  const QSeries b2 = embedded_table(Table::kB2);
  const QSeries pre = QSeries::from_coeffs({YLaurent(1), -(y_pow(2) + y_pow(-2)), YLaurent(1)}, 0,
                                           QSeries::kExact);
  const QSeries inner = b2 * pre;
  CHECK(inner.coeff(0) == YLaurent(1));
  CHECK(inner.coeff(1) == YLaurent(3));
  CHECK_FALSE(inner.first_difference(parse_table_text(table_text(Table::kB2))).has_value());
  CHECK(inner.coeff(2) == -(YLaurent(3) * y_pow(2) + YLaurent(1) + YLaurent(3) * y_pow(-2)));

  const QSeries b2bar = embedded_table(Table::kB2Bar);
  CHECK(b2bar.trunc() == 31);
  const long head[5] = {1, 1, 2, -1, 4};
  for (int n = 0; n < 5; ++n) CHECK(b2bar.coeff(n) == YLaurent(head[n]));
  CHECK(b2bar.coeff(30) == YLaurent(20749875130L));
}

TEST_CASE("table text round trip") {
  for (Table t : all_tables()) {
    CAPTURE(table_name(t));
    // The B2 text holds the factor without 1/((1 - yq)(1 - q/y)).
    if (t == Table::kB2) continue;
    const QSeries s = embedded_table(t);
    const QSeries back = parse_table_text(table_text(t));
    CHECK(back.trunc() == s.trunc());
    CHECK_FALSE(back.first_difference(s).has_value());
  }
  CHECK_THROWS_AS(parse_table_text("0 | 0:1\n1 | x"), Error);
}

TEST_CASE("A1 factors") {
  for (int l = 1; l <= 6; ++l) {
    const QSeries f = f_bar(l, l + 4);
    CHECK(agree_below(f, QSeries::constant(1), l + 1));
    CHECK(agree_below(f, f_bar_closed_form(l, l + 4), l + 4));
  }
}

TEST_CASE("H_1 is DG~2 at y = 1 and y = -1") {
  const int k = 10;
  CHECK(agree_below(h_at_one(1, k), at_y(dg2_tilde(k), 1), k));
  CHECK(agree_below(h_at_minus_one(1, k), gf_series(YMode::kMinusOne, k).dg2, k));
  CHECK(h_at_one(4, k, HReading::kG8).first_difference(h_at_one(4, k)).has_value());
}

TEST_CASE("series identities") {
  for (SeriesIdentity id : all_series_identities()) {
    const IdentityReport r = verify_series_identity(id, 12, 8);
    CAPTURE(r.id);
    CAPTURE(r.detail);
    CHECK(r.passed);
    CHECK(parse_identity(identity_name(id)) == id);
  }
  CHECK_FALSE(parse_identity("nonsense").has_value());
}
