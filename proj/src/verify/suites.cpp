#include "verify/suites.hpp"

#include <algorithm>

#include "modular/named_series.hpp"
#include "modular/tables.hpp"
#include "ring/error.hpp"

namespace refsev {

BSolution reference_b(YMode mode) {
  BSolution ref;
  switch (mode) {
    case YMode::kSymbolic:
      ref.b1 = embedded_table(Table::kB1);
      ref.b2 = embedded_table(Table::kB2);
      break;
    case YMode::kOne:
      ref.b1 = at_y(embedded_table(Table::kB1), 1);
      ref.b2 = at_y(embedded_table(Table::kB2), 1);
      break;
    case YMode::kMinusOne:
      ref.b1 = embedded_table(Table::kB1Bar);
      ref.b2 = embedded_table(Table::kB2Bar);
      break;
  }
  ref.order = std::min(ref.b1.trunc(), ref.b2.trunc());
  return ref;
}

ConjectureReport check_solve_b(YMode mode, int order, CHTable& table, BSolution* solution) {
  ConjectureReport rep;
  rep.id = "solveB";
  rep.range = "y=" + to_string(mode) + ", node polynomials for delta<" + std::to_string(order) +
              " on P2 (d=5, d=6) and P1xP1 ((c,d)=(5,5))";
  rep.orders = "mod q^" + std::to_string(order);
  const BSolution ref = reference_b(mode);
  if (order > ref.order) {
    fail(ErrorCode::kTruncation, "reference tables are known below q^" +
                                     std::to_string(ref.order) + ", requested q^" +
                                     std::to_string(order));
  }
  const BSolution got = solve_b_from_engine(mode, order, table);
  const char* names[] = {"B1", "B2"};
  const QSeries* solved[] = {&got.b1, &got.b2};
  const QSeries* refs[] = {&ref.b1, &ref.b2};
  for (int i = 0; i < 2; ++i) {
    const QSeries want = refs[i]->truncated(order);
    const auto diff = solved[i]->first_difference(want);
    Verdict v{std::string(names[i]) + (mode == YMode::kMinusOne ? "bar" : "") + " mod q^" +
                  std::to_string(order),
              VerdictStatus::kPass, ""};
    if (diff) {
      v.status = VerdictStatus::kFail;
      v.detail = "first difference at q^" + std::to_string(*diff) + ": solved " +
                 solved[i]->coeff(*diff).to_string() + ", table " + want.coeff(*diff).to_string();
    }
    rep.verdicts.push_back(std::move(v));
  }
  if (solution) *solution = got;
  return rep;
}

ConjectureReport check_node_polynomials(NodeFamily f, int delta_max, YMode mode, CHTable& table,
                                        const FitGrid& grid, std::vector<NodePolynomial>* fits) {
  ConjectureReport rep;
  rep.id = "nodepoly";
  rep.range = to_string(f) + ", 1<=delta<=" + std::to_string(delta_max) + ", y=" + to_string(mode);
  rep.orders = "exact";
  const auto polys = fit_node_polynomials(f, delta_max, mode, table, grid);
  for (const NodePolynomial& np : polys) {
    if (np.delta == 0) continue;
    Verdict v{to_string(f) + " Q_" + std::to_string(np.delta) + " (fit on " +
                  std::to_string(np.fitted_on.size()) + ", held out " +
                  std::to_string(np.validated_on.size()) + ")",
              np.validated ? VerdictStatus::kPass : VerdictStatus::kFail, np.detail};
    rep.verdicts.push_back(std::move(v));
  }
  if (fits) *fits = polys;
  return rep;
}

}  // namespace refsev
