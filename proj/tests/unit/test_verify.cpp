#include "doctest.h"

#include "caporaso/ch_recursion.hpp"
#include "ring/error.hpp"
#include "verify/conjectures.hpp"
#include "verify/cross_engine.hpp"
#include "verify/node_polynomial.hpp"
#include "verify/reform.hpp"
#include "verify/solve_b.hpp"
#include "verify/suites.hpp"

using namespace refsev;

TEST_CASE("node polynomials for plane curves at y = 1") {
  CHTable table;
  const auto fits = fit_node_polynomials(NodeFamily::kP2, 2, YMode::kOne, table);
  REQUIRE(fits.size() == 3);
  for (const auto& np : fits) {
    CHECK(np.validated);
    if (np.delta > 0) CHECK(np.validated_on.size() >= 3);
  }
  // Classical one- and two-nodal formulas, checked well outside the fit grid.
  for (long d = 2; d <= 12; ++d) {
    CHECK(fits[1].n.eval({d}) == YLaurent(3 * (d - 1) * (d - 1)));
    const Rational two = make_rational(3, 2) * Rational((d - 1) * (d - 2) * (3 * d * d - 3 * d - 11));
    CHECK(fits[2].n.eval({d}) == YLaurent(two));
  }
}

TEST_CASE("refined node polynomials predict the recursion") {
  CHTable table;
  const auto fits = fit_node_polynomials(NodeFamily::kP2, 3, YMode::kSymbolic, table);
  for (const auto& np : fits) {
    CAPTURE(np.delta);
    CHECK(np.validated);
    for (long d = np.delta + 3; d <= np.delta + 6; ++d) {
      CHECK(np.n.eval({d}) == table.severi_degree(Polygon{0, 1, d}, np.delta));
    }
  }
}

TEST_CASE("multi-parameter node polynomial on Hirzebruch surfaces") {
  CHTable table;
  const ConjectureReport rep = check_node_polynomials(NodeFamily::kSigma, 2, YMode::kSymbolic, table);
  CHECK(rep.passed());
  CHECK(rep.verdicts.size() == 2);
  const ConjectureReport p1 = check_node_polynomials(NodeFamily::kP1xP1, 2, YMode::kMinusOne, table);
  CHECK(p1.passed());
}

TEST_CASE("B1, B2 recovered from the recursion match the tables") {
  CHTable table;
  BSolution sol;
  const ConjectureReport rep = check_solve_b(YMode::kSymbolic, 4, table, &sol);
  CHECK(rep.passed());
  CHECK(sol.b1.trunc() >= 4);
  CHECK(check_solve_b(YMode::kMinusOne, 6, table).passed());
  CHECK_THROWS_AS(check_solve_b(YMode::kSymbolic, 40, table), Error);
}

TEST_CASE("universal series need two independent instances") {
  CHTable table;
  const auto fits = fit_node_polynomials(NodeFamily::kP2, 2, YMode::kSymbolic, table);
  const GfSeries s = gf_series(YMode::kSymbolic, 6);
  const BInstance a = instance_from_node_polys(fits, {5}, 3);
  const BInstance b = instance_from_node_polys(fits, {6}, 3);
  // Both are P2 instances, so (K^2, LK) = (9, -3d) has rank 2 only with two d.
  CHECK_NOTHROW(solve_universal_b(s, {a, b}, 3));
  CHECK_THROWS_AS(solve_universal_b(s, {a}, 3), Error);
}

TEST_CASE("generating function forms agree with each other") {
  CHTable table;
  const GfSeries s = gf_series(YMode::kSymbolic, 8);
  for (long d = 2; d <= 4; ++d) {
    const SurfaceBundle p2 = SurfaceBundle::p2(d);
    const GfData data = gf_data(p2);
    const QSeries one = QSeries::constant(1);
    const QSeries gen = form2_series(s, data, one, 4);
    std::vector<YLaurent> m;
    for (int delta = 0; delta < 4; ++delta) {
      CHECK(form3_coefficient(s, data, one, delta) == gen.coeff(delta));
      m.push_back(gen.coeff(delta));
      if (delta <= d) CHECK(gen.coeff(delta) == table.severi_degree(p2, delta));
    }
    CHECK_FALSE(form1_lhs(m, s.dg2, 4).first_difference(form1_rhs(s, data, one, 4)).has_value());
  }
}

TEST_CASE("conjecture checks on small ranges") {
  CHTable table;
  ConjectureRange r;
  r.delta_max = 2;
  for (ConjectureId id : {ConjectureId::kRefpol, ConjectureId::kConjanP112, ConjectureId::kBlowk,
                          ConjectureId::kA1conSigma2, ConjectureId::kP2blow, ConjectureId::kMultconH12}) {
    const ConjectureReport rep = check_conjecture(id, r, table);
    CAPTURE(rep.id);
    CHECK(rep.passed());
    CHECK(rep.count(VerdictStatus::kFail) == 0);
    CHECK(parse_conjecture(conjecture_name(id)) == id);
  }
}

TEST_CASE("printed validity edge of the blow-up formula is reported, not hidden") {
  // At d = k the line bundle is 2kF; the recursion gives 0 for one node while
  // the generating function does not, so the literal range must fail.
  CHTable table;
  ConjectureRange r;
  r.delta_max = 1;
  r.d_max = 0;
  r.two_k_values = {2};
  r.literal_bounds = true;
  const ConjectureReport rep = check_conjecture(ConjectureId::kBlowk, r, table);
  CHECK_FALSE(rep.passed());
  CHECK(table.severi_degree(Polygon{2, 2, 0}, 1).is_zero());
}

TEST_CASE("cross-engine suite") {
  CHTable table;
  CrossEngineRange r;
  r.c_max = 2;
  r.d_max = 2;
  r.m_max = 1;
  r.delta_max = 2;
  r.floor_bound = 2;
  const ConjectureReport rep = check_cross_engine(r, table);
  CHECK(rep.passed());
  CHECK(rep.verdicts.size() == 3 * 3 * 2 * 3);
}

TEST_CASE("report formatting") {
  ConjectureReport rep;
  rep.id = "demo";
  rep.range = "r";
  rep.orders = "o";
  CHECK_FALSE(rep.passed());
  rep.verdicts.push_back({"a", VerdictStatus::kPass, ""});
  rep.verdicts.push_back({"b", VerdictStatus::kTypoCandidate, "reading"});
  CHECK(rep.passed());
  const std::string text = format_report(rep);
  CHECK(text.find("demo: PASS") != std::string::npos);
  rep.verdicts.push_back({"c", VerdictStatus::kFail, "x"});
  CHECK_FALSE(rep.passed());
  CHECK(format_report(rep).find("demo: FAIL") != std::string::npos);
}
