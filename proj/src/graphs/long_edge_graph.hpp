#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ring/ylaurent.hpp"

namespace refsev {

struct Edge {
  int from;
  int to;
  int weight;

  int length() const { return to - from; }
  int cogenus() const { return length() * weight - 1; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// How a graph weight is specialized: the full Laurent polynomial, its value
// at y = 1 (Severi), or at y = -1 (Welschinger).
enum class CountMode { kRefined, kSeveri, kWelschinger };

// Weighted multigraph on the vertex set Z_{>=0} without weight-1 edges of
// length 1. Edges are kept sorted, so equality is structural.
class LongEdgeGraph {
 public:
  LongEdgeGraph() = default;
  // Throws kInvalidArgument on loops, reversed edges or short edges.
  explicit LongEdgeGraph(std::vector<Edge> edges);

  const std::vector<Edge>& edges() const { return edges_; }
  bool empty() const { return edges_.empty(); }
  // Distinct edges with their multiplicities, in edge order.
  std::vector<std::pair<Edge, int>> edge_classes() const;

  int cogenus() const;
  // Smallest / largest vertex adjacent to an edge; 0 for the empty graph.
  int minv() const;
  int maxv() const;
  int length() const { return maxv() - minv(); }
  // Total weight of edges (i -> k) with i < j <= k.
  long lambda(int j) const;
  // lambda(j) minus the number of edges (j-1 -> j).
  long lambda_bar(int j) const;
  LongEdgeGraph shifted(int k) const;
  int epsilon0() const;
  int epsilon1() const;
  // Every vertex strictly between minv and maxv is spanned by some edge.
  bool spans_interior() const;
  bool is_template() const { return !empty() && minv() == 0 && spans_interior(); }

  YLaurent multiplicity(CountMode mode) const;
  std::string to_string() const;

  friend bool operator==(const LongEdgeGraph&, const LongEdgeGraph&) = default;
  friend auto operator<=>(const LongEdgeGraph& a, const LongEdgeGraph& b) {
    return a.edges_ <=> b.edges_;
  }

 private:
  std::vector<Edge> edges_;
};

// (beta_0, ..., beta_M).
using BetaSeq = std::vector<long>;

// s(c, m, d) = (c, c + m, ..., c + m d).
BetaSeq s_sequence(long c, long m, long d);

enum class Allowability { kAllowable, kSemiallowable, kStrict };
bool is_allowable(const LongEdgeGraph& g, const BetaSeq& beta,
                  Allowability kind);

// All long-edge graphs of cogenus exactly delta with maxv <= maxv_bound.
std::vector<LongEdgeGraph> enumerate_graphs(int delta, int maxv_bound);

}  // namespace refsev
