#pragma once

#include <string>
#include <vector>

#include "verify/node_polynomial.hpp"
#include "verify/reform.hpp"

namespace refsev {

// One surface with line bundle together with its degrees
// sum_delta N_delta t^delta (constant term 1).
struct BInstance {
  std::string label;
  GfData data;
  QSeries n_series;
};

struct BSolution {
  QSeries b1;
  QSeries b2;
  int order = 0;
};

// Recovers B1, B2 mod q^order. With A_i(t) the quotient of instance i's series
// by (t/g)^chi(L) (g g'/Delta~(g))^(chi(O)/2), log A_i(DG~2(q)) equals
// K^2_i log B1 + LK_i log B2, a linear system per q-order. Only dg2 and delta
// of `s` are used. Throws kInvalidArgument when the (K^2, LK) pairs have rank
// below 2 and kDomain when extra instances are inconsistent.
BSolution solve_universal_b(const GfSeries& s, const std::vector<BInstance>& instances,
                            int order);

// Instance from fitted node polynomials evaluated at `point`.
BInstance instance_from_node_polys(const std::vector<NodePolynomial>& polys,
                                   const std::vector<long>& point, int order);

// Fits node polynomials for P2 and P1xP1 with delta < order and solves from
// P2 at d = 5, P1xP1 at (5, 5), with P2 at d = 6 as a residual check.
BSolution solve_b_from_engine(YMode mode, int order, CHTable& table);

}  // namespace refsev
