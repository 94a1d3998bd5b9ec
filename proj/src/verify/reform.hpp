#pragma once

#include <vector>

#include "caporaso/ch_recursion.hpp"
#include "ring/qseries.hpp"

namespace refsev {

// Intersection data entering the generating functions.
struct GfData {
  Rational k_squared;
  Rational lk;
  Rational chi_l;
  Rational chi_o = 1;
};

GfData gf_data(const SurfaceBundle& s);

// The q-series the generating functions are built from, all specialized to
// one y-mode.
struct GfSeries {
  YMode mode = YMode::kSymbolic;
  QSeries dg2;    // DG~2
  QSeries ddg2;   // D DG~2
  QSeries delta;  // Delta~
  QSeries b1;
  QSeries b2;
};

// Named series to order k with the embedded B tables (B1bar/B2bar at y = -1,
// where DG~2 and Delta~ are built as G2bar and eta^16 eta(q^2)^4).
GfSeries gf_series(YMode mode, int k);

// sum_delta M_delta t^delta mod t^order, from
//   (t/g)^chi(L) B1(g)^K^2 B2(g)^LK (g g' / Delta~(g))^(chi(O)/2) R(g),
// with g the compositional inverse of DG~2.
QSeries form2_series(const GfSeries& s, const GfData& data, const QSeries& r, int order);

// M_delta as the coefficient of q^(chi(L)-1) in
//   DG~2^(chi(L)-1-delta) B1^K^2 B2^LK D DG~2 / (Delta~ D DG~2)^(chi(O)/2) R.
YLaurent form3_coefficient(const GfSeries& s, const GfData& data, const QSeries& r, int delta);

// The two sides of
//   sum_delta M_delta DG~2^delta
//     = (DG~2/q)^chi(L) B1^K^2 B2^LK R / (Delta~ D DG~2 / q^2)^(chi(O)/2),
// both mod q^order.
QSeries form1_lhs(const std::vector<YLaurent>& m, const QSeries& dg2, int order);
QSeries form1_rhs(const GfSeries& s, const GfData& data, const QSeries& r, int order);

// Throws kTruncation naming the shortfall when `s` is not known below q^need.
void require_known(const QSeries& s, int need, const char* name);

}  // namespace refsev
