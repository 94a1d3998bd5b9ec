#include "verify/solve_b.hpp"

#include "ring/error.hpp"
#include "ring/linalg.hpp"

namespace refsev {

BSolution solve_universal_b(const GfSeries& s, const std::vector<BInstance>& instances,
                            int order) {
  if (order < 1) fail(ErrorCode::kInvalidArgument, "order must be >= 1");
  if (instances.size() < 2) fail(ErrorCode::kInvalidArgument, "need at least two instances");
  require_known(s.dg2, order + 1, "DG~2");
  require_known(s.delta, order + 1, "Delta~");

  const QSeries g = s.dg2.truncated(order + 1).compose_inverse();
  const QSeries u = g.shifted24(-24);
  const QSeries zg = s.delta.shifted24(-24).truncated(order).compose(g);
  const QSeries ratio = g.derivative() / zg;
  const QSeries dg2 = s.dg2.truncated(order);

  std::vector<QSeries> logs;
  RationalMatrix a;
  for (const auto& inst : instances) {
    require_known(inst.n_series, order, inst.label.c_str());
    QSeries denom = u.pow(-inst.data.chi_l) * ratio.pow(inst.data.chi_o / 2);
    const QSeries quotient = (inst.n_series.truncated(order) / denom.truncated(order)).truncated(order);
    logs.push_back(quotient.log().compose(dg2).truncated(order));
    a.push_back({inst.data.k_squared, inst.data.lk});
  }

  std::vector<YLaurent> log_b1(static_cast<std::size_t>(order));
  std::vector<YLaurent> log_b2(static_cast<std::size_t>(order));
  for (int n = 1; n < order; ++n) {
    std::vector<YLaurent> rhs;
    for (const auto& l : logs) rhs.push_back(l.coeff(n));
    const auto x = solve_exact(a, rhs);
    if (!x) {
      fail(ErrorCode::kDomain, "instances disagree at q^" + std::to_string(n) +
                                   ": no common B1, B2 fits all of them");
    }
    log_b1[static_cast<std::size_t>(n)] = (*x)[0];
    log_b2[static_cast<std::size_t>(n)] = (*x)[1];
  }
  BSolution out;
  out.order = order;
  out.b1 = QSeries::from_coeffs(std::move(log_b1), 0, order).exp();
  out.b2 = QSeries::from_coeffs(std::move(log_b2), 0, order).exp();
  return out;
}

BInstance instance_from_node_polys(const std::vector<NodePolynomial>& polys,
                                   const std::vector<long>& point, int order) {
  if (static_cast<int>(polys.size()) < order) {
    fail(ErrorCode::kTruncation, "node polynomials known for delta < " +
                                     std::to_string(polys.size()) + ", need delta < " +
                                     std::to_string(order));
  }
  const NodeFamily f = polys.front().family;
  std::vector<YLaurent> coeffs;
  for (int delta = 0; delta < order; ++delta) {
    const auto& np = polys[static_cast<std::size_t>(delta)];
    if (!np.validated) {
      fail(ErrorCode::kDomain, "node polynomial N_" + std::to_string(delta) +
                                   " failed validation: " + np.detail);
    }
    coeffs.push_back(np.n.eval(point));
  }
  const SurfaceBundle bundle = family_bundle(f, point);
  return {bundle.describe(), gf_data(bundle), QSeries::from_coeffs(std::move(coeffs), 0, order)};
}

BSolution solve_b_from_engine(YMode mode, int order, CHTable& table) {
  const auto p2 = fit_node_polynomials(NodeFamily::kP2, order - 1, mode, table);
  const auto p1p1 = fit_node_polynomials(NodeFamily::kP1xP1, order - 1, mode, table);
  std::vector<BInstance> inst;
  inst.push_back(instance_from_node_polys(p2, {5}, order));
  inst.push_back(instance_from_node_polys(p1p1, {5, 5}, order));
  inst.push_back(instance_from_node_polys(p2, {6}, order));
  return solve_universal_b(gf_series(mode, order + 1), inst, order);
}

}  // namespace refsev
