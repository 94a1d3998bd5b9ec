#pragma once

#include "verify/conjectures.hpp"

namespace refsev {

struct CrossEngineRange {
  int c_max = 4;
  int d_max = 4;
  int m_max = 2;
  int delta_max = 3;
  YMode mode = YMode::kSymbolic;
  // Also compare against floor diagrams when c, d <= this bound (-1: never).
  int floor_bound = -1;
};

// For every Sigma_m polygon (c, m, d) in range, compares the
// recursion value with the long-edge-graph count of s(c, m, d), and checks
// that the value is palindromic with nonnegative integer coefficients.
ConjectureReport check_cross_engine(const CrossEngineRange& range, CHTable& table);

}  // namespace refsev
