#include "verify/cross_engine.hpp"

#include <sstream>

#include "graphs/floor_diagram.hpp"
#include "graphs/orderings.hpp"
#include "ring/error.hpp"

namespace refsev {

namespace {

CountMode count_mode(YMode mode) {
  switch (mode) {
    case YMode::kSymbolic:
      return CountMode::kRefined;
    case YMode::kOne:
      return CountMode::kSeveri;
    case YMode::kMinusOne:
      return CountMode::kWelschinger;
  }
  return CountMode::kRefined;
}

}  // namespace

ConjectureReport check_cross_engine(const CrossEngineRange& range, CHTable& table) {
  ConjectureReport rep;
  rep.id = "cross-engine";
  std::ostringstream rng;
  rng << "c<=" << range.c_max << ", d<=" << range.d_max << ", m<=" << range.m_max
      << ", delta<=" << range.delta_max << ", y=" << to_string(range.mode);
  rep.range = rng.str();
  rep.orders = "exact";
  const CountMode cm = count_mode(range.mode);
  for (long m = 0; m <= range.m_max; ++m) {
    for (long c = 0; c <= range.c_max; ++c) {
      for (long d = 0; d <= range.d_max; ++d) {
        const Polygon p{c, m, d};
        for (int delta = 0; delta <= range.delta_max; ++delta) {
          std::ostringstream name;
          name << "(c,m,d)=(" << c << "," << m << "," << d << ") delta=" << delta;
          try {
            const YLaurent ch = table.severi_degree(p, delta, range.mode);
            const YLaurent graphs = refined_count(s_sequence(c, m, d), delta, cm);
            if (ch != graphs) {
              rep.verdicts.push_back({name.str(), VerdictStatus::kFail,
                                      "recursion vs graphs: " + describe_mismatch(ch, graphs)});
              continue;
            }
            if (!ch.is_palindromic() || !ch.has_integer_coefficients() ||
                (range.mode == YMode::kSymbolic && !ch.has_nonnegative_coefficients())) {
              rep.verdicts.push_back({name.str(), VerdictStatus::kFail,
                                      "value is not a palindromic nonnegative integral Laurent "
                                      "polynomial: " + ch.to_string()});
              continue;
            }
            if (c <= range.floor_bound && d <= range.floor_bound) {
              const YLaurent fd = floor_diagram_count(static_cast<int>(c), static_cast<int>(m),
                                                      static_cast<int>(d), delta, cm);
              if (fd != ch) {
                rep.verdicts.push_back({name.str(), VerdictStatus::kFail,
                                        "recursion vs floor diagrams: " + describe_mismatch(ch, fd)});
                continue;
              }
            }
            rep.verdicts.push_back({name.str(), VerdictStatus::kPass, ""});
          } catch (const Error& e) {
            rep.verdicts.push_back({name.str(), VerdictStatus::kFail, std::string("error: ") + e.what()});
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace refsev
