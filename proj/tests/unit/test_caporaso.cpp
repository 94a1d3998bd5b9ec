#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "caporaso/ch_recursion.hpp"
#include "caporaso/surface.hpp"
#include "graphs/floor_diagram.hpp"
#include "io/cache_store.hpp"
#include "ring/error.hpp"

using namespace refsev;

namespace {

YLaurent y_pow(int dexp) { return YLaurent::monomial(1, dexp); }

bool palindromic(const YLaurent& v) { return v.reflected() == v; }

}  // namespace

TEST_CASE("surface data") {
  const SurfaceBundle p2 = SurfaceBundle::p2(4);
  CHECK(p2.polygon() == Polygon{0, 1, 4});
  CHECK(p2.l_squared() == 16);
  CHECK(p2.lk() == -12);
  CHECK(p2.k_squared() == 9);
  CHECK(p2.chi_l() == 15);
  CHECK(p2.dim() == 14);
  // dH + cF on Sigma_m with H^2 = m, HF = 1, F^2 = 0 and K = -2H + (m-2)F.
  const SurfaceBundle s = SurfaceBundle::sigma(2, 3, 2);
  CHECK(s.polygon() == Polygon{3, 2, 2});
  CHECK(s.l_squared() == 2 * 4 + 2 * 3 * 2);
  CHECK(s.lk() == -2 * 2 * 2 - 2 * 2 - 2 * 3 + 2 * 2);
  CHECK(s.k_squared() == 8);
  CHECK(s.chi_l() == (s.l_squared() - s.lk()) / 2 + 1);
  CHECK(SurfaceBundle::p11m(3, 2).polygon() == Polygon{0, 3, 2});
}

TEST_CASE("recursion reproduces classical Severi degrees") {
  CHTable table;
  for (long d = 1; d <= 8; ++d) {
    const Polygon p{0, 1, d};
    CHECK(table.severi_degree(p, 0) == YLaurent(1));
    CHECK(table.severi_number(p, 1) == 3 * (d - 1) * (d - 1));
    // Node polynomial for two nodes, valid from d = 2 on.
    if (d >= 2) {
      const Integer n2 = 3 * (d - 1) * (d - 2) * (3 * d * d - 3 * d - 11) / 2;
      CHECK(table.severi_number(p, 2) == n2);
    }
  }
  CHECK(table.severi_number({0, 1, 4}, 3) == 675);
  CHECK(table.severi_degree({0, 1, 3}, 1) == y_pow(2) + YLaurent(10) + y_pow(-2));
  CHECK(table.welschinger_number({0, 1, 3}, 1) == 8);
}

TEST_CASE("specialized modes agree with the symbolic value") {
  CHTable table;
  for (long d = 1; d <= 5; ++d) {
    for (int delta = 0; delta <= 4; ++delta) {
      const Polygon p{1, 1, d};
      const YLaurent v = table.severi_degree(p, delta);
      CHECK(table.severi_degree(p, delta, YMode::kOne) == YLaurent(v.eval_at_one()));
      CHECK(table.severi_degree(p, delta, YMode::kMinusOne) ==
            YLaurent(v.eval_at_minus_one_via_sqrt_i()));
      CHECK(Rational(table.severi_number(p, delta)) == v.eval_at_one());
      CHECK(Rational(table.welschinger_number(p, delta)) == v.eval_at_minus_one_via_sqrt_i());
    }
  }
}

TEST_CASE("recursion outputs are palindromic with nonnegative integer coefficients") {
  CHTable table;
  for (long c = 0; c <= 3; ++c) {
    for (long m = 0; m <= 2; ++m) {
      for (long d = 0; d <= 3; ++d) {
        for (int delta = 0; delta <= 4; ++delta) {
          const YLaurent v = table.severi_degree(Polygon{c, m, d}, delta);
          CHECK(palindromic(v));
          CHECK(v.has_integer_coefficients());
          CHECK(v.has_nonnegative_coefficients());
        }
      }
    }
  }
}

TEST_CASE("recursion agrees with floor diagrams") {
  CHTable table;
  for (int c = 0; c <= 2; ++c) {
    for (int m = 0; m <= 2; ++m) {
      for (int d = 0; d <= 3; ++d) {
        for (int delta = 0; delta <= 3; ++delta) {
          CAPTURE(c);
          CAPTURE(m);
          CAPTURE(d);
          CAPTURE(delta);
          CHECK(table.severi_degree(Polygon{c, m, d}, delta) == floor_diagram_count(c, m, d, delta));
        }
      }
    }
  }
}

TEST_CASE("relative degrees") {
  CHTable table;
  // Initial conditions: a line through a fixed point of H; fibres through
  // fixed points.
  CHECK(table.relative_degree({0, 1, 1}, 0, {1}, {}) == YLaurent(1));
  CHECK(table.relative_degree({3, 0, 0}, 0, {3}, {}) == YLaurent(1));
  // N(0, (HL)) is the absolute degree, trailing zeros are irrelevant.
  CHECK(table.relative_degree({0, 1, 3}, 1, {}, {3}) == table.severi_degree({0, 1, 3}, 1));
  CHECK(table.relative_degree({0, 1, 3}, 1, {0, 0}, {3, 0}) ==
        table.relative_degree({0, 1, 3}, 1, {}, {3}));
  CHECK_THROWS_AS(table.relative_degree({0, 1, 3}, 1, {}, {2}), Error);
  CHECK_THROWS_AS(table.severi_degree(Polygon{0, 1, 3}, -1), Error);
}

TEST_CASE("cache determinism and torn-record recovery") {
  const auto dir = std::filesystem::temp_directory_path() / "refsev_unit_cache";
  std::filesystem::remove_all(dir);
  const auto file = dir / "chcache.v1.txt";
  YLaurent cold;
  {
    CHTable plain;
    cold = plain.severi_degree({1, 1, 3}, 3);
  }
  std::size_t records = 0;
  {
    CacheStore store(file);
    CHTable table(&store);
    CHECK(table.severi_degree({1, 1, 3}, 3) == cold);
    records = store.size();
    CHECK(records > 0);
  }
  {
    std::ofstream out(file, std::ios::app | std::ios::binary);
    out << "torn\tre";
  }
  {
    CacheStore store(file);
    CHECK(store.dropped_bytes() == 7);
    CHECK(store.size() == records);
    CHTable table(&store);
    CHECK(table.severi_degree({1, 1, 3}, 3) == cold);
    CHECK(store.size() == records);
  }
  {
    std::ofstream out(file, std::ios::trunc);
    out << "SOMETHING-ELSE v9\n";
  }
  CHECK_THROWS_AS(CacheStore{file}, Error);
  std::filesystem::remove_all(dir);
}
