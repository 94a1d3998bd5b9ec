#pragma once

#include "graphs/long_edge_graph.hpp"

namespace refsev {

// P_beta(G), or P^s_beta(G) when `strict` is set: the number of
// beta-extended orderings of G up to permutations of identical edges.
Integer count_orderings(const LongEdgeGraph& g, const BetaSeq& beta, bool strict);

// Phi_beta(G) (or Phi^s_beta): the logarithm of G -> P_beta under the
// convolution that splits the edge multiset of G into two sub-multisets.
Rational phi(const LongEdgeGraph& g, const BetaSeq& beta, bool strict);

// Memoized enumerate_graphs.
const std::vector<LongEdgeGraph>& graphs_of_cogenus(int delta, int maxv_bound);

// N^delta_beta, n^delta_beta or W^delta_beta depending on `mode`.
YLaurent refined_count(const BetaSeq& beta, int delta, CountMode mode);

}  // namespace refsev
