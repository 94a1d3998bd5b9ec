#include "graphs/long_edge_graph.hpp"

#include <algorithm>
#include <sstream>

#include "ring/error.hpp"

namespace refsev {

LongEdgeGraph::LongEdgeGraph(std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (const Edge& e : edges_) {
    if (e.from < 0 || e.to <= e.from || e.weight < 1) {
      fail(ErrorCode::kInvalidArgument, "malformed edge");
    }
    if (e.to == e.from + 1 && e.weight == 1) {
      fail(ErrorCode::kInvalidArgument,
           "short edge (" + std::to_string(e.from) + "->" +
               std::to_string(e.to) + ", w=1) is not allowed");
    }
  }
  std::sort(edges_.begin(), edges_.end());
}

std::vector<std::pair<Edge, int>> LongEdgeGraph::edge_classes() const {
  std::vector<std::pair<Edge, int>> out;
  for (const Edge& e : edges_) {
    if (!out.empty() && out.back().first == e) {
      ++out.back().second;
    } else {
      out.emplace_back(e, 1);
    }
  }
  return out;
}

int LongEdgeGraph::cogenus() const {
  int s = 0;
  for (const Edge& e : edges_) s += e.cogenus();
  return s;
}

int LongEdgeGraph::minv() const {
  if (edges_.empty()) return 0;
  return edges_.front().from;
}

int LongEdgeGraph::maxv() const {
  int v = 0;
  for (const Edge& e : edges_) v = std::max(v, e.to);
  return v;
}

long LongEdgeGraph::lambda(int j) const {
  long s = 0;
  for (const Edge& e : edges_) {
    if (e.from < j && j <= e.to) s += e.weight;
  }
  return s;
}

long LongEdgeGraph::lambda_bar(int j) const {
  long s = lambda(j);
  for (const Edge& e : edges_) {
    if (e.from == j - 1 && e.to == j) --s;
  }
  return s;
}

LongEdgeGraph LongEdgeGraph::shifted(int k) const {
  LongEdgeGraph g = *this;
  for (Edge& e : g.edges_) {
    e.from += k;
    e.to += k;
    if (e.from < 0) fail(ErrorCode::kInvalidArgument, "shift below vertex 0");
  }
  return g;
}

int LongEdgeGraph::epsilon0() const {
  const int v = minv();
  for (const Edge& e : edges_) {
    if ((e.from == v || e.to == v) && e.weight != 1) return 0;
  }
  return 1;
}

int LongEdgeGraph::epsilon1() const {
  const int v = maxv();
  for (const Edge& e : edges_) {
    if ((e.from == v || e.to == v) && e.weight != 1) return 0;
  }
  return 1;
}

bool LongEdgeGraph::spans_interior() const {
  for (int i = minv() + 1; i < maxv(); ++i) {
    const bool covered = std::any_of(edges_.begin(), edges_.end(), [i](const Edge& e) {
      return e.from < i && i < e.to;
    });
    if (!covered) return false;
  }
  return true;
}

YLaurent LongEdgeGraph::multiplicity(CountMode mode) const {
  switch (mode) {
    case CountMode::kRefined: {
      YLaurent m(1);
      for (const Edge& e : edges_) {
        const YLaurent q = qnum(e.weight);
        m *= q * q;
      }
      return m;
    }
    case CountMode::kSeveri: {
      Integer m = 1;
      for (const Edge& e : edges_) m *= e.weight * e.weight;
      return YLaurent(Rational(m));
    }
    case CountMode::kWelschinger:
      for (const Edge& e : edges_) {
        if (e.weight % 2 == 0) return YLaurent();
      }
      return YLaurent(1);
  }
  return YLaurent();
}

std::string LongEdgeGraph::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i > 0) os << ", ";
    os << "(" << edges_[i].from << "->" << edges_[i].to << ", w=" << edges_[i].weight
       << ")";
  }
  os << "}";
  return os.str();
}

BetaSeq s_sequence(long c, long m, long d) {
  if (c < 0 || m < 0 || d < 0) {
    fail(ErrorCode::kInvalidArgument, "s(c,m,d) needs nonnegative parameters");
  }
  BetaSeq beta;
  for (long i = 0; i <= d; ++i) beta.push_back(c + m * i);
  return beta;
}

bool is_allowable(const LongEdgeGraph& g, const BetaSeq& beta,
                  Allowability kind) {
  const int big_m = static_cast<int>(beta.size()) - 1;
  if (g.maxv() > big_m + 1) return false;
  for (int j = 1; j <= big_m + 1; ++j) {
    const long need = kind == Allowability::kSemiallowable ? g.lambda_bar(j)
                                                           : g.lambda(j);
    if (beta[static_cast<std::size_t>(j - 1)] < need) return false;
  }
  if (kind == Allowability::kStrict) {
    for (const Edge& e : g.edges()) {
      const bool at_end = e.from == 0 || e.to == 0 || e.from == big_m + 1 ||
                          e.to == big_m + 1;
      if (at_end && e.weight != 1) return false;
    }
  }
  return true;
}

namespace {

void enumerate_rec(const std::vector<Edge>& types, std::size_t t, int remaining,
                   std::vector<Edge>& current, std::vector<LongEdgeGraph>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (t == types.size()) return;
  const int cost = types[t].cogenus();
  enumerate_rec(types, t + 1, remaining, current, out);
  int used = 0;
  while (cost * (used + 1) <= remaining) {
    current.push_back(types[t]);
    ++used;
    enumerate_rec(types, t + 1, remaining - cost * used, current, out);
  }
  current.resize(current.size() - static_cast<std::size_t>(used));
}

}  // namespace

std::vector<LongEdgeGraph> enumerate_graphs(int delta, int maxv_bound) {
  if (delta < 0) fail(ErrorCode::kInvalidArgument, "negative cogenus");
  std::vector<Edge> types;
  for (int i = 0; i < maxv_bound; ++i) {
    for (int j = i + 1; j <= maxv_bound; ++j) {
      for (int w = 1; (j - i) * w - 1 <= delta; ++w) {
        if (j == i + 1 && w == 1) continue;
        types.push_back({i, j, w});
      }
    }
  }
  std::sort(types.begin(), types.end());
  std::vector<LongEdgeGraph> out;
  std::vector<Edge> current;
  enumerate_rec(types, 0, delta, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace refsev
