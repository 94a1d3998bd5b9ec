#pragma once

#include "verify/conjectures.hpp"
#include "verify/node_polynomial.hpp"
#include "verify/solve_b.hpp"

namespace refsev {

// The embedded tables the solved B1, B2 are compared against: B1, B2 for the
// symbolic mode, their y = 1 specializations, and B1bar, B2bar for y = -1.
BSolution reference_b(YMode mode);

// Solves B1, B2 mod q^order from the recursion and compares them with
// reference_b(mode). `solution`, when given, receives the solved series.
ConjectureReport check_solve_b(YMode mode, int order, CHTable& table,
                               BSolution* solution = nullptr);

// Fits Q_1..Q_deltamax and reports, per delta, whether every held-out grid
// point is predicted exactly. `fits`, when given, receives the fits.
ConjectureReport check_node_polynomials(NodeFamily f, int delta_max, YMode mode, CHTable& table,
                                        const FitGrid& grid = {},
                                        std::vector<NodePolynomial>* fits = nullptr);

}  // namespace refsev
