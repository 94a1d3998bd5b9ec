#include "verify/reform.hpp"

#include "modular/named_series.hpp"
#include "modular/tables.hpp"
#include "ring/error.hpp"

namespace refsev {

GfData gf_data(const SurfaceBundle& s) {
  return {s.k_squared(), s.lk(), s.chi_l(), s.chi_o()};
}

GfSeries gf_series(YMode mode, int k) {
  GfSeries s;
  s.mode = mode;
  if (mode == YMode::kMinusOne) {
    s.dg2 = eisenstein_bar(2, k);
    s.ddg2 = s.dg2.d_q();
    const QSeries e = eta(k);
    s.delta = (e.pow(16) * e.substitute_power(2).pow(4)).truncated(k);
    s.b1 = embedded_table(Table::kB1Bar);
    s.b2 = embedded_table(Table::kB2Bar);
    return s;
  }
  s.dg2 = dg2_tilde(k);
  s.ddg2 = ddg2_tilde(k);
  s.delta = delta_tilde(k);
  s.b1 = embedded_table(Table::kB1);
  s.b2 = embedded_table(Table::kB2);
  if (mode == YMode::kOne) {
    s.dg2 = at_y(s.dg2, 1);
    s.ddg2 = at_y(s.ddg2, 1);
    s.delta = at_y(s.delta, 1);
    s.b1 = at_y(s.b1, 1);
    s.b2 = at_y(s.b2, 1);
  }
  return s;
}

void require_known(const QSeries& s, int need, const char* name) {
  if (s.trunc() < need) {
    fail(ErrorCode::kTruncation, std::string(name) + " is known below q^" +
                                     std::to_string(s.trunc()) + " but q^" +
                                     std::to_string(need - 1) + " is needed (short by " +
                                     std::to_string(need - s.trunc()) + ")");
  }
}

namespace {

int integral(const Rational& r, const char* what) {
  if (r.get_den() != 1) fail(ErrorCode::kDomain, std::string(what) + " must be an integer");
  return static_cast<int>(r.get_num().get_si());
}

}  // namespace

QSeries form2_series(const GfSeries& s, const GfData& data, const QSeries& r, int order) {
  if (order < 1) fail(ErrorCode::kInvalidArgument, "order must be >= 1");
  const int v = r.is_zero_to_precision() ? 0 : std::min(0, r.lead());
  const int n = order - v;
  require_known(s.dg2, n + 1, "DG~2");
  require_known(s.delta, n + 1, "Delta~");
  require_known(s.b1, n, "B1");
  require_known(s.b2, n, "B2");
  require_known(r, order, "R");

  const QSeries g = s.dg2.truncated(n + 1).compose_inverse();
  const QSeries u = g.shifted24(-24);  // g / t
  const QSeries z = s.delta.shifted24(-24).truncated(n);
  const QSeries zg = z.compose(g);
  const QSeries gp = g.derivative();

  QSeries result = u.pow(-data.chi_l);
  result *= (gp / zg).pow(data.chi_o / 2);
  result *= s.b1.truncated(n).compose(g).pow(data.k_squared);
  result *= s.b2.truncated(n).compose(g).pow(data.lk);
  result = result.truncated(n);
  result *= r.truncated(order).compose(g);
  return result.truncated(order);
}

YLaurent form3_coefficient(const GfSeries& s, const GfData& data, const QSeries& r, int delta) {
  if (delta < 0) fail(ErrorCode::kInvalidArgument, "delta must be >= 0");
  const int index = delta - 1 + integral(data.chi_o, "chi(O)");
  if (r.is_zero_to_precision()) {
    require_known(r, index + 1, "R");
    return YLaurent();
  }
  const int v = r.lead();
  if (v > index) {
    require_known(r, index + 1, "R");
    return YLaurent();
  }
  const int n = index + 1 - v;
  require_known(s.dg2, n + 1, "DG~2");
  require_known(s.ddg2, n + 1, "D DG~2");
  require_known(s.delta, n + 1, "Delta~");
  require_known(s.b1, n, "B1");
  require_known(s.b2, n, "B2");
  require_known(r, index + 1, "R");

  const QSeries x = s.dg2.shifted24(-24).truncated(n);
  const QSeries y = s.ddg2.shifted24(-24).truncated(n);
  const QSeries z = s.delta.shifted24(-24).truncated(n);
  QSeries u = x.pow(data.chi_l - 1 - delta);
  u *= s.b1.truncated(n).pow(data.k_squared);
  u *= s.b2.truncated(n).pow(data.lk);
  u *= y;
  u *= (z * y).pow(-data.chi_o / 2);
  return (u.truncated(n) * r.truncated(index + 1)).coeff(index);
}

QSeries form1_lhs(const std::vector<YLaurent>& m, const QSeries& dg2, int order) {
  require_known(dg2, order, "DG~2");
  const QSeries t = dg2.truncated(order);
  QSeries sum = QSeries::big_o(order);
  QSeries power = QSeries::constant(1);
  for (std::size_t i = 0; i < m.size() && static_cast<int>(i) < order; ++i) {
    sum += power.scaled(m[i]);
    power = (power * t).truncated(order);
  }
  return sum;
}

QSeries form1_rhs(const GfSeries& s, const GfData& data, const QSeries& r, int order) {
  const int v = r.is_zero_to_precision() ? 0 : std::min(0, r.lead());
  const int n = order - v;
  require_known(s.dg2, n + 1, "DG~2");
  require_known(s.ddg2, n + 1, "D DG~2");
  require_known(s.delta, n + 1, "Delta~");
  require_known(s.b1, n, "B1");
  require_known(s.b2, n, "B2");
  require_known(r, order, "R");
  const QSeries x = s.dg2.shifted24(-24).truncated(n);
  const QSeries y = s.ddg2.shifted24(-24).truncated(n);
  const QSeries z = s.delta.shifted24(-24).truncated(n);
  QSeries u = x.pow(data.chi_l);
  u *= s.b1.truncated(n).pow(data.k_squared);
  u *= s.b2.truncated(n).pow(data.lk);
  u *= (z * y).pow(-data.chi_o / 2);
  return (u.truncated(n) * r.truncated(order)).truncated(order);
}

}  // namespace refsev
