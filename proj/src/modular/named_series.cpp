#include "modular/named_series.hpp"

#include <map>
#include <mutex>
#include <vector>

#include "modular/tables.hpp"
#include "ring/error.hpp"
#include "ring/linalg.hpp"

namespace refsev {

namespace {

void require_k(int k) {
  if (k < 1) fail(ErrorCode::kInvalidArgument, "truncation must be >= 1");
}

YLaurent y_pow(int e) { return YLaurent::monomial(1, 2 * e); }

// sum_{d | n} fn(n, d) q^n for 1 <= n < k.
QSeries divisor_sum(int k, const std::function<YLaurent(long, long)>& fn) {
  std::vector<YLaurent> c(static_cast<std::size_t>(k));
  for (long d = 1; d < k; ++d) {
    for (long n = d; n < k; n += d) c[static_cast<std::size_t>(n)] += fn(n, d);
  }
  return QSeries::from_coeffs(std::move(c), 0, k);
}

// prod_{n>=1} (1 - q^n), known below q^k, by the pentagonal number theorem.
QSeries euler_product(int k) {
  std::vector<YLaurent> c(static_cast<std::size_t>(k));
  c[0] = YLaurent(1);
  for (long j = 1; j * (3 * j - 1) / 2 < k; ++j) {
    const YLaurent sign(j % 2 == 0 ? 1 : -1);
    c[static_cast<std::size_t>(j * (3 * j - 1) / 2)] += sign;
    if (j * (3 * j + 1) / 2 < k) c[static_cast<std::size_t>(j * (3 * j + 1) / 2)] += sign;
  }
  return QSeries::from_coeffs(std::move(c), 0, k);
}

Integer ipow(long base, long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return r;
}

QSeries d_power(const QSeries& s, int j) {
  QSeries r = s;
  for (int i = 0; i < j; ++i) r = r.d_q();
  return r;
}

}  // namespace

Rational bernoulli(int n) {
  static std::mutex mu;
  static std::vector<Rational> b{Rational(1)};
  std::lock_guard lock(mu);
  while (static_cast<int>(b.size()) <= n) {
    const long m = static_cast<long>(b.size());
    Rational s = 0;
    for (long j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * b[static_cast<std::size_t>(j)];
    b.push_back(-s / Rational(m + 1));
  }
  return b[static_cast<std::size_t>(n)];
}

QSeries eisenstein(int weight, int k) {
  require_k(k);
  if (weight < 2 || weight % 2 != 0) fail(ErrorCode::kInvalidArgument, "weight must be even >= 2");
  QSeries s = divisor_sum(k, [weight](long, long d) { return YLaurent(Rational(ipow(d, weight - 1))); });
  return s + QSeries::constant(YLaurent(-bernoulli(weight) / Rational(2 * weight)));
}

QSeries eisenstein_bar(int weight, int k) {
  require_k(k);
  if (weight < 2 || weight % 2 != 0) fail(ErrorCode::kInvalidArgument, "weight must be even >= 2");
  return divisor_sum(k, [weight](long n, long d) {
    return (n / d) % 2 == 1 ? YLaurent(Rational(ipow(d, weight - 1))) : YLaurent();
  });
}

QSeries eta(int k) {
  require_k(k);
  return euler_product(k).shifted24(1);
}

QSeries discriminant(int k) {
  require_k(k);
  return euler_product(k).pow(24).shifted24(24);
}

QSeries theta2_q2(int k) {
  require_k(k);
  return QSeries::generate(0, k, [](int n) {
    long r = 0;
    while ((r + 1) * (r + 1) <= n) ++r;
    if (r * r != n) return YLaurent();
    if (n == 0) return YLaurent(1);
    return YLaurent(r % 2 == 0 ? 2 : -2);
  });
}

QSeries eta_q2_cubed(int k) {
  require_k(k);
  std::vector<YLaurent> c(static_cast<std::size_t>(k));
  for (long n = 0; n * (n + 1) < k; ++n) {
    c[static_cast<std::size_t>(n * (n + 1))] = YLaurent((n % 2 == 0 ? 1 : -1) * (2 * n + 1));
  }
  return QSeries::from_coeffs(std::move(c), 0, k, 6);
}

QSeries theta(int k) {
  require_k(k);
  std::vector<YLaurent> c(static_cast<std::size_t>(k));
  for (long n = 0; n * (n + 1) / 2 < k; ++n) {
    // n and -1-n share the exponent n(n+1)/2.
    const long e = n * (n + 1) / 2;
    const int sign = n % 2 == 0 ? 1 : -1;
    c[static_cast<std::size_t>(e)] += YLaurent::monomial(sign, static_cast<int>(2 * n + 1));
    c[static_cast<std::size_t>(e)] += YLaurent::monomial(-sign, static_cast<int>(-2 * n - 1));
  }
  return QSeries::from_coeffs(std::move(c), 0, k, 3);
}

QSeries theta_normalized(int k) {
  const YLaurent s = YLaurent::monomial(1, 1) - YLaurent::monomial(1, -1);
  return theta(k).shifted24(-3).map_coeffs([&s](const YLaurent& c) { return c.divide_exact(s); });
}

QSeries theta_normalized_product(int k) {
  require_k(k);
  QSeries acc = QSeries::constant(1).truncated(k);
  for (int n = 1; n < k; ++n) {
    const QSeries qn = QSeries::monomial(1, n);
    acc *= (QSeries::constant(1) - qn);
    acc *= (QSeries::constant(1) - qn.scaled(y_pow(1)));
    acc *= (QSeries::constant(1) - qn.scaled(y_pow(-1)));
  }
  return acc;
}

QSeries dg2_tilde(int k) {
  require_k(k);
  return divisor_sum(k, [](long n, long d) {
    const YLaurent q = qnum(static_cast<int>(d));
    return q * q * Rational(n / d);
  });
}

QSeries ddg2_tilde(int k) { return dg2_tilde(k).d_q(); }

QSeries delta_tilde(int k) {
  require_k(k);
  const QSeries th = theta_normalized(k);
  return (euler_product(k).pow(18) * th * th).shifted24(24);
}

QSeries f_lower(int l, int k) {
  if (l < 0) fail(ErrorCode::kInvalidArgument, "f_l needs l >= 0");
  require_k(k);
  const int half = l / 2;
  if (l % 2 == 0) {
    QSeries acc = theta2_q2(k);
    for (int i = 0; i < half; ++i) acc = acc.d_q() - acc.scaled(YLaurent(i * i));
    Rational c = Rational(half % 2 == 0 ? 1 : -1) / Rational(factorial(l));
    return acc.scaled(YLaurent(c));
  }
  QSeries acc = eta_q2_cubed(k);
  for (int i = 0; i < half; ++i) {
    acc = acc.d_q() - acc.scaled(YLaurent(make_rational((2 * i + 1) * (2 * i + 1), 4)));
  }
  Rational c = Rational(half % 2 == 0 ? 1 : -1) / Rational(factorial(l));
  return acc.scaled(YLaurent(c));
}

QSeries f_bar(int l, int k) {
  // f_l is supported from q^(l^2/4) on; ask for enough terms to cover k.
  const int lift = (l * l) / 4 + 1;
  return f_lower(l, k + lift).shifted24(-6 * l * l).truncated(k);
}

QSeries f_bar_closed_form(int l, int k) {
  if (l < 0) fail(ErrorCode::kInvalidArgument, "f_l needs l >= 0");
  require_k(k);
  std::vector<YLaurent> c(static_cast<std::size_t>(k));
  for (long m = 0; m * (m + l) < k; ++m) {
    if (m + l == 0) {
      c[0] += YLaurent(1);
      continue;
    }
    Rational v = make_rational(2 * m + l, m + l) * Rational(binomial(m + l, l));
    if (m % 2 == 1) v = -v;
    c[static_cast<std::size_t>(m * (m + l))] += YLaurent(v);
  }
  return QSeries::from_coeffs(std::move(c), 0, k);
}

YLaurent s_squared() { return y_pow(1) - YLaurent(2) + y_pow(-1); }

QSeries f0_divisor(int k) { return dg2_tilde(k).scaled(s_squared()); }

QSeries f1_divisor(int k) {
  require_k(k);
  return divisor_sum(k, [](long n, long d) {
    const Rational c = make_rational(1, 2) * (make_rational(-n * n * n, d * d * d) +
                                          make_rational(n * n, d) - make_rational(n, d));
    const YLaurent s = YLaurent::monomial(1, static_cast<int>(d)) -
                       YLaurent::monomial(1, static_cast<int>(-d));
    return s * s * c;
  });
}

QSeries f2_divisor(int k) {
  require_k(k);
  return divisor_sum(k, [](long n, long d) {
    const Rational c = make_rational(n * n, d * d) - make_rational(n, 2);
    return (y_pow(static_cast<int>(d)) - y_pow(static_cast<int>(-d))) * c;
  });
}

namespace {

// Log-derivatives of the normalized theta function; the prefactor
// q^(1/8)(y^(1/2) - y^(-1/2)) contributes 1/8 to D log and
// (y - 1/y) / (2 s^2) to ' log.
struct ThetaLogs {
  QSeries d_log;        // D theta / theta
  QSeries s2_y_log;     // s^2 theta' / theta
  QSeries s2_dy_ratio;  // s^2 D(theta') / theta
};

ThetaLogs theta_logs(int k) {
  const QSeries th = theta_normalized(k);
  const QSeries inv = QSeries::constant(1) / th;
  const YLaurent s2 = s_squared();
  const YLaurent w = (y_pow(1) - y_pow(-1)) * make_rational(1, 2);
  const QSeries eighth = QSeries::constant(YLaurent(make_rational(1, 8)));
  ThetaLogs out;
  out.d_log = eighth + th.d_q() * inv;
  const QSeries hat_y = th.d_y() * inv;
  out.s2_y_log = QSeries::constant(w) + hat_y.scaled(s2);
  out.s2_dy_ratio = out.d_log.scaled(w) + (hat_y.scaled(make_rational(1, 8)) + th.d_y().d_q() * inv).scaled(s2);
  return out;
}

}  // namespace

QSeries f0_theta(int k) {
  const ThetaLogs t = theta_logs(k);
  return -t.d_log - eisenstein(2, k).scaled(3);
}

QSeries f1_theta(int k) {
  const ThetaLogs t = theta_logs(k);
  const QSeries g2 = eisenstein(2, k);
  const QSeries& dl = t.d_log;
  return (dl * dl).scaled(make_rational(1, 2)) + (dl * g2).scaled(3) + dl.scaled(make_rational(1, 2)) +
         eisenstein(4, k).scaled(make_rational(15, 8)) - g2.d_q().scaled(make_rational(9, 4)) +
         g2.scaled(make_rational(3, 2));
}

QSeries s2_f2_theta(int k) {
  const ThetaLogs t = theta_logs(k);
  const QSeries g2 = eisenstein(2, k);
  return -(t.d_log * t.s2_y_log).scaled(make_rational(1, 2)) - t.s2_dy_ratio.scaled(make_rational(1, 6)) -
         (g2 * t.s2_y_log).scaled(2);
}

QSeries h_refined(int m, int k) {
  if (m == 1) return dg2_tilde(k);
  if (m != 2) fail(ErrorCode::kInvalidArgument, "refined H_m is known for m = 1, 2");
  // H_2 = (F1 (y - 1/y) + F2 s^2) / (s^4 (y - 1/y)).
  const YLaurent s2 = s_squared();
  const YLaurent a = y_pow(1) - y_pow(-1);
  const YLaurent den = s2 * s2 * a;
  const QSeries num = f1_divisor(k).scaled(a) + f2_divisor(k).scaled(s2);
  return num.map_coeffs([&den](const YLaurent& c) { return c.divide_exact(den); });
}

namespace {

struct Term {
  Rational c;
  std::vector<QSeries> factors;
};

QSeries combine(const std::vector<Term>& terms, int k) {
  QSeries acc = QSeries::big_o(k);
  for (const Term& t : terms) {
    QSeries prod = QSeries::constant(YLaurent(t.c));
    for (const QSeries& f : t.factors) prod *= f;
    acc += prod;
  }
  return acc;
}

}  // namespace

QSeries h_at_one(int m, int k, HReading reading) {
  require_k(k);
  auto g = [k](int w, int j) { return d_power(eisenstein(w, k), j); };
  const QSeries delta = discriminant(k);
  switch (m) {
    case 1:
      return g(2, 1);
    case 2:
      return combine({{make_rational(-1, 24), {g(2, 1)}},
                      {make_rational(1, 6), {g(2, 2)}},
                      {make_rational(-1, 8), {g(4, 1)}},
                      {make_rational(-1, 24), {g(2, 3)}},
                      {make_rational(1, 24), {g(4, 2)}}},
                     k);
    case 3:
      return combine({{make_rational(1, 90), {g(2, 1)}},
                      {make_rational(-1, 18), {g(2, 2)}},
                      {make_rational(1, 24), {g(4, 1)}},
                      {make_rational(reading == HReading::kFlipD3G2 ? 13 : -13, 288), {g(2, 3)}},
                      {make_rational(-73, 1440), {g(4, 2)}},
                      {make_rational(1, 120), {g(6, 1)}},
                      {make_rational(-1, 144), {g(2, 4)}},
                      {make_rational(13, 1440), {g(4, 3)}},
                      {make_rational(-1, 480), {g(6, 2)}},
                      {make_rational(1, 2880), {g(2, 5)}},
                      {make_rational(-1, 2016), {g(4, 4)}},
                      {make_rational(1, 6912), {g(6, 3)}},
                      {make_rational(1, 241920), {delta}}},
                     k);
    case 4: {
      const bool minus = reading == HReading::kMinusSign || reading == HReading::kMinusSignG8;
      const bool g8 = reading == HReading::kG8 || reading == HReading::kMinusSignG8;
      return combine({{make_rational(-9, 1120), {g(2, 1)}},
                      {make_rational(7, 160), {g(2, 2)}},
                      {make_rational(-21, 640), {g(4, 1)}},
                      {make_rational(-1063, 23040), {g(2, 3)}},
                      {make_rational(1207, 23040), {g(4, 2)}},
                      {make_rational(-3, 320), {g(6, 1)}},
                      {make_rational(79, 5760), {g(2, 4)}},
                      {make_rational(-43, 2304), {g(4, 3)}},
                      {make_rational(minus ? -149 : 149, 26880), {g(6, 2)}},
                      {make_rational(-1, 2688), {g(8, 1)}},
                      {make_rational(-91, 69120), {g(2, 5)}},
                      {make_rational(95, 48384), {g(4, 4)}},
                      {make_rational(-461, 645120), {g(6, 3)}},
                      {make_rational(101, 1451520), {g(8, 2)}},
                      {make_rational(-11, 5806080), {delta}},
                      {make_rational(1, 17280), {g(2, 6)}},
                      {make_rational(-89, 967680), {g(4, 5)}},
                      {make_rational(1, 25920), {g(6, 4)}},
                      {make_rational(-1, 207360), {g(8, 3)}},
                      {make_rational(1, 2903040), {delta.d_q()}},
                      {make_rational(-1, 967680), {g(2, 7)}},
                      {make_rational(1, 580608), {g(4, 6)}},
                      {make_rational(-1, 1244160), {g(6, 5)}},
                      {make_rational(1, 8211456), {g8 ? g(8, 4) : g(4, 4)}},
                      {make_rational(-1, 84913920), {d_power(delta, 2)}},
                      {make_rational(1, 864864), {delta, g(4, 0)}}},
                     k);
    }
    default:
      fail(ErrorCode::kInvalidArgument, "H_m(1) is known for m = 1..4");
  }
}

QSeries h_at_minus_one(int m, int k, HReading reading) {
  require_k(k);
  auto g = [k](int w, int j) { return d_power(eisenstein(w, k), j); };
  auto gb = [k](int w, int j) { return d_power(eisenstein_bar(w, k), j); };
  switch (m) {
    case 1:
      return gb(2, 0);
    case 2:
      return combine({{make_rational(1, 8), {gb(2, 0)}},
                      {make_rational(-1, 8), {gb(2, 1)}},
                      {make_rational(1, 8), {gb(4, 0)}},
                      {make_rational(-1, 8), {g(2, 1)}}},
                     k);
    case 3:
      return combine({{make_rational(1, 24), {gb(2, 0)}},
                      {make_rational(-1, 24), {g(2, 1)}},
                      {make_rational(7, 96), {gb(4, 0)}},
                      {make_rational(-7, 96), {gb(2, 1)}},
                      {make_rational(1, 2), {gb(2, 0), gb(2, 0), gb(2, 0)}},
                      {make_rational(-1, 192), {gb(4, 1)}},
                      {make_rational(-5, 64), {g(4, 0), gb(2, 0)}},
                      {make_rational(1, 96), {g(2, 2)}},
                      {make_rational(-5, 1024), {g(4, 1)}}},
                     k);
    case 4:
      return combine({{make_rational(3, 128), {gb(2, 0)}},
                      {make_rational(-5, 192), {g(2, 1)}},
                      {make_rational(-67, 1536), {gb(2, 1)}},
                      {make_rational(67, 1536), {gb(4, 0)}},
                      {make_rational(35, 2304), {g(2, 2)}},
                      {make_rational(-247, 24576), {g(4, 1)}},
                      {make_rational(55, 144), {gb(2, 0), gb(2, 0), gb(2, 0)}},
                      {make_rational(-55, 1536), {g(4, 0), gb(2, 0)}},
                      {make_rational(-11, 4608), {gb(4, 1)}},
                      {make_rational(reading == HReading::kFlipD3G2 ? -1 : 1, 192), {g(2, 3)}},
                      {make_rational(25, 6144), {g(4, 2)}},
                      {make_rational(-7, 8192), {g(6, 1)}},
                      {make_rational(11, 8), {gb(2, 0), gb(2, 0), gb(2, 0), gb(2, 0)}},
                      {make_rational(-13, 192), {gb(2, 0), g(2, 2)}},
                      {make_rational(35, 512), {gb(2, 0), g(4, 1)}},
                      {make_rational(-21, 1024), {g(6, 0), gb(2, 0)}},
                      {make_rational(1, 512), {gb(4, 2)}}},
                     k);
    default:
      fail(ErrorCode::kInvalidArgument, "H_m(-1) is known for m = 1..4");
  }
}

QSeries fhat_cm(int m, int k) {
  require_k(k);
  switch (m) {
    case 2:
      return theta2_q2(k);
    case 3:
    case 4: {
      const QSeries t = embedded_table(m == 3 ? Table::kFhatC3 : Table::kFhatC4);
      if (k > t.trunc()) {
        fail(ErrorCode::kTruncation, "F^_c" + std::to_string(m) + " is tabulated below q^" +
                                         std::to_string(t.trunc()));
      }
      return t.truncated(k);
    }
    default:
      fail(ErrorCode::kInvalidArgument, "F^_cm is available for m = 2, 3, 4");
  }
}

QSeries fhat_cm_general(int m) {
  if (m < 2) fail(ErrorCode::kInvalidArgument, "the general expansion needs m >= 2");
  const Rational mm(m);
  const YLaurent c2 = (y_pow(1) + y_pow(-1)) * Rational(m - 2) +
                      YLaurent(mm * mm / 2 + mm * 3 / 2 - 5);
  const Rational a3(m * m + 5 * m - 14);
  const YLaurent c3 = (y_pow(1) + y_pow(-1)) * a3 +
                      YLaurent((mm * mm * mm + mm * mm * 9 + mm * 44 - 132) / 6);
  return QSeries::from_coeffs({YLaurent(1), YLaurent(-m), c2, -c3}, 0, 4);
}

QSeries at_y(const QSeries& s, int y) {
  if (y != 1 && y != -1) fail(ErrorCode::kInvalidArgument, "specialization is at y = 1 or -1");
  return s.map_coeffs([y](const YLaurent& c) {
    return YLaurent(y == 1 ? c.eval_at_one() : c.eval_at_minus_one_via_sqrt_i());
  });
}

}  // namespace refsev
