#pragma once

#include <vector>

#include "graphs/long_edge_graph.hpp"

namespace refsev {

// Floor diagram for the polygon Delta_{c,m,d}: floors 1..d, edges i -> k
// (i < k) with weights, the sequence (s_1, ..., s_d), and a number of free
// elevators (weight-1 vertical lines meeting no floor, i.e. fibre
// components). s_1 + ... + s_d + free_elevators = c.
struct FloorDiagram {
  int c = 0;
  int m = 0;
  int d = 0;
  std::vector<Edge> edges;  // floors are numbered from 1
  std::vector<int> s;       // s[j-1] = s_j
  int free_elevators = 0;

  long divergence(int j) const;
  // Number of sink vertices attached to floor j in the marking construction.
  long sinks(int j) const { return m + s[static_cast<std::size_t>(j - 1)] - divergence(j); }
  int cogenus() const;
  YLaurent multiplicity(CountMode mode) const;
};

// All Delta_{c,m,d}-floor diagrams of the given cogenus.
std::vector<FloorDiagram> enumerate_floor_diagrams(int c, int m, int d, int delta);

// nu(D): markings up to equivalence, counted as linear extensions over the
// marked vertex classes. Throws kLimit when the search space exceeds
// `state_limit` states.
Integer count_markings(const FloorDiagram& fd, std::size_t state_limit = 2000000);

// Sum of mult(D) * nu(D) over the floor diagrams of cogenus delta.
YLaurent floor_diagram_count(int c, int m, int d, int delta,
                             CountMode mode = CountMode::kRefined);

}  // namespace refsev
