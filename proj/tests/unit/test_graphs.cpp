#include "doctest.h"

#include <random>

#include "graphs/floor_diagram.hpp"
#include "graphs/long_edge_graph.hpp"
#include "graphs/orderings.hpp"
#include "graphs/templates.hpp"
#include "ring/error.hpp"

using namespace refsev;

namespace {

YLaurent y_pow(int dexp) { return YLaurent::monomial(1, dexp); }

}  // namespace

TEST_CASE("long-edge graph construction") {
  CHECK_THROWS_AS(LongEdgeGraph({{0, 1, 1}}), Error);  // weight-1 edge of length 1
  CHECK_THROWS_AS(LongEdgeGraph({{2, 1, 2}}), Error);
  CHECK_THROWS_AS(LongEdgeGraph({{1, 1, 2}}), Error);
  const LongEdgeGraph g({{0, 2, 1}, {1, 2, 2}});
  CHECK(g.cogenus() == 2);
  CHECK(g.minv() == 0);
  CHECK(g.maxv() == 2);
  CHECK(g.is_template());
  CHECK(g.shifted(3).minv() == 3);
  CHECK_FALSE(g.shifted(3).is_template());
  CHECK(LongEdgeGraph({{0, 1, 2}, {3, 4, 2}}).spans_interior() == false);
}

TEST_CASE("edge multiplicities") {
  const LongEdgeGraph g({{0, 1, 2}, {0, 1, 3}});
  CHECK(g.multiplicity(CountMode::kSeveri) == YLaurent(36));
  CHECK(g.multiplicity(CountMode::kWelschinger) == YLaurent(0));
  CHECK(g.multiplicity(CountMode::kRefined) == qnum(2) * qnum(2) * qnum(3) * qnum(3));
  const LongEdgeGraph odd({{0, 1, 3}});
  CHECK(odd.multiplicity(CountMode::kWelschinger) == YLaurent(1));
}

TEST_CASE("graph enumeration by cogenus") {
  CHECK(enumerate_graphs(0, 5).size() == 1);
  // Cogenus 1: one weight-2 edge of length 1 or one weight-1 edge of length 2.
  const auto one = enumerate_graphs(1, 3);
  CHECK(one.size() == 3 + 2);
  for (const auto& g : enumerate_graphs(3, 4)) CHECK(g.cogenus() == 3);
  CHECK(templates_of_cogenus(1).size() == 2);
  for (const auto& t : templates_of_cogenus(3)) CHECK(t.is_template());
}

TEST_CASE("floor diagrams reproduce classical counts") {
  // Plane cubics: 12 one-nodal cubics through 8 points, 8 real rational ones
  // (Welschinger), refined value y + 10 + 1/y.
  CHECK(floor_diagram_count(0, 1, 3, 1, CountMode::kSeveri) == YLaurent(12));
  CHECK(floor_diagram_count(0, 1, 3, 1, CountMode::kWelschinger) == YLaurent(8));
  CHECK(floor_diagram_count(0, 1, 3, 1) == y_pow(2) + YLaurent(10) + y_pow(-2));
  // One-nodal plane curves of degree d: 3 (d - 1)^2.
  for (int d = 1; d <= 5; ++d) {
    CHECK(floor_diagram_count(0, 1, d, 1, CountMode::kSeveri) == YLaurent(3L * (d - 1) * (d - 1)));
  }
  for (int d = 0; d <= 5; ++d) CHECK(floor_diagram_count(0, 1, d, 0) == YLaurent(1));
  // Plane quartics with 3 nodes: 620 rational plus 55 line-and-cubic pairs.
  CHECK(floor_diagram_count(0, 1, 4, 3, CountMode::kSeveri) == YLaurent(675));
  // Curves of bidegree (1,1) on P1 x P1 through 2 points with a node: the two
  // rulings pairs.
  CHECK(floor_diagram_count(1, 0, 1, 1, CountMode::kSeveri) == YLaurent(2));
}

TEST_CASE("floor diagrams and long-edge graphs agree") {
  for (int c = 0; c <= 2; ++c) {
    for (int m = 0; m <= 2; ++m) {
      for (int d = 0; d <= 3; ++d) {
        for (int delta = 0; delta <= 3; ++delta) {
          CAPTURE(c);
          CAPTURE(m);
          CAPTURE(d);
          CAPTURE(delta);
          CHECK(floor_diagram_count(c, m, d, delta) ==
                refined_count(s_sequence(c, m, d), delta, CountMode::kRefined));
        }
      }
    }
  }
}

TEST_CASE("strict Phi vanishes off shifted templates") {
  for (int delta = 1; delta <= 3; ++delta) {
    for (const auto& g : enumerate_graphs(delta, 5)) {
      if (g.spans_interior()) continue;
      for (long c = 0; c <= 2; ++c) {
        const BetaSeq beta = s_sequence(c, 1, 7);
        if (!is_allowable(g, beta, Allowability::kSemiallowable)) continue;
        CHECK(phi(g, beta, true) == 0);
      }
    }
  }
}

TEST_CASE("Phi is affine in beta: held-out prediction") {
  std::mt19937 rng(20241016);
  for (int delta = 1; delta <= 2; ++delta) {
    for (const auto& g : templates_of_cogenus(delta)) {
      auto probe = [&] {
        const int len = g.maxv() + 2 + static_cast<int>(rng() % 2);
        BetaSeq b(static_cast<std::size_t>(len));
        for (int j = 0; j < len; ++j) {
          b[static_cast<std::size_t>(j)] = std::max(0L, g.lambda_bar(j + 1)) + static_cast<long>(rng() % 4);
        }
        return b;
      };
      std::vector<BetaSeq> train;
      for (int i = 0; i < 3 * (g.maxv() + 2); ++i) train.push_back(probe());
      const BetaLinearForm form = fit_phi_linear(g, train);
      for (int i = 0; i < 4; ++i) {
        const BetaSeq b = probe();
        CHECK(form.eval(b) == phi(g, b, false));
      }
    }
  }
}

TEST_CASE("marking count limit is enforced") {
  const auto fds = enumerate_floor_diagrams(0, 1, 3, 1);
  REQUIRE_FALSE(fds.empty());
  CHECK_THROWS_AS(count_markings(fds.front(), 1), Error);
}
