#include "graphs/floor_diagram.hpp"

#include "ring/error.hpp"

namespace refsev {

long FloorDiagram::divergence(int j) const {
  long div = 0;
  for (const Edge& e : edges) {
    if (e.from == j) div += e.weight;
    if (e.to == j) div -= e.weight;
  }
  return div;
}

int FloorDiagram::cogenus() const {
  long total = 0;
  for (int j = 1; j <= d; ++j) {
    total += static_cast<long>(s[static_cast<std::size_t>(j - 1)]) * (j - 1);
    total += sinks(j) * (d - j);
  }
  for (const Edge& e : edges) total += e.cogenus();
  total += static_cast<long>(free_elevators) * d;
  return static_cast<int>(total);
}

YLaurent FloorDiagram::multiplicity(CountMode mode) const {
  YLaurent mult(1);
  for (const Edge& e : edges) {
    if (e.weight == 1) continue;
    switch (mode) {
      case CountMode::kRefined: {
        const YLaurent q = qnum(e.weight);
        mult *= q * q;
        break;
      }
      case CountMode::kSeveri:
        mult *= Rational(e.weight * e.weight);
        break;
      case CountMode::kWelschinger:
        if (e.weight % 2 == 0) return YLaurent();
        break;
    }
  }
  return mult;
}

namespace {

struct Search {
  int c, m, d, delta;
  std::vector<FloorDiagram>* out;
};

void choose_adjacent(const Search& st, FloorDiagram& fd, std::vector<long>& free_sinks,
                     int j, long carry, long to_place) {
  // free_sinks[j-1] = m + s_j - div_j before adding weight-1 edges j -> j+1.
  if (j == st.d) {
    if (to_place == 0 && free_sinks[static_cast<std::size_t>(j - 1)] + carry >= 0) {
      st.out->push_back(fd);
    }
    return;
  }
  const long cap = free_sinks[static_cast<std::size_t>(j - 1)] + carry;
  for (long a = 0; a <= cap && a <= to_place; ++a) {
    for (long k = 0; k < a; ++k) fd.edges.push_back({j, j + 1, 1});
    choose_adjacent(st, fd, free_sinks, j + 1, a, to_place - a);
    fd.edges.resize(fd.edges.size() - static_cast<std::size_t>(a));
  }
}

void with_costly_edges(const Search& st, FloorDiagram& fd, int budget) {
  for (int cost = 0; cost <= budget; ++cost) {
    for (const LongEdgeGraph& g : enumerate_graphs(cost, st.d - 1)) {
      FloorDiagram trial = fd;
      const LongEdgeGraph moved = g.shifted(1);
      for (const Edge& e : moved.edges()) trial.edges.push_back(e);
      std::vector<long> free_sinks(static_cast<std::size_t>(st.d));
      long base = 0;
      for (int j = 1; j <= st.d; ++j) {
        free_sinks[static_cast<std::size_t>(j - 1)] =
            st.m + trial.s[static_cast<std::size_t>(j - 1)] - trial.divergence(j);
        base += free_sinks[static_cast<std::size_t>(j - 1)] * (st.d - j);
      }
      // Each weight-1 edge j -> j+1 moves one sink from j to j+1 and lowers
      // the cogenus by one.
      const long src_cost = st.delta - budget;
      const long excess = src_cost + cost + base - st.delta;
      if (excess < 0) continue;
      choose_adjacent(st, trial, free_sinks, 1, 0, excess);
    }
  }
}

void choose_sources(const Search& st, FloorDiagram& fd, int j, int left, int cost) {
  if (cost > st.delta) return;
  if (j == st.d) {
    fd.s[static_cast<std::size_t>(j - 1)] = left;
    const int total = cost + left * (j - 1);
    if (total <= st.delta) with_costly_edges(st, fd, st.delta - total);
    return;
  }
  for (int a = 0; a <= left; ++a) {
    fd.s[static_cast<std::size_t>(j - 1)] = a;
    choose_sources(st, fd, j + 1, left - a, cost + a * (j - 1));
  }
}

}  // namespace

std::vector<FloorDiagram> enumerate_floor_diagrams(int c, int m, int d, int delta) {
  if (c < 0 || m < 0 || d < 0 || delta < 0) {
    fail(ErrorCode::kInvalidArgument, "floor diagrams need nonnegative parameters");
  }
  std::vector<FloorDiagram> out;
  if (d == 0) {
    // No floors: the only diagram is empty and has cogenus 0.
    if (delta == 0) out.push_back(FloorDiagram{c, m, 0, {}, {}, c});
    return out;
  }
  // Each free elevator crosses every floor once.
  for (int f = 0; f <= c && f * d <= delta; ++f) {
    FloorDiagram fd{c, m, d, {}, std::vector<int>(static_cast<std::size_t>(d), 0), f};
    Search st{c, m, d, delta - f * d, &out};
    choose_sources(st, fd, 1, c - f, 0);
  }
  return out;
}

Integer count_markings(const FloorDiagram& fd, std::size_t state_limit) {
  struct Cls {
    int lo, hi;
    long count;
  };
  // Gap g lies between floor g and floor g+1 (gap 0 precedes floor 1).
  std::vector<Cls> classes;
  for (int j = 1; j <= fd.d; ++j) {
    const long s = fd.s[static_cast<std::size_t>(j - 1)];
    if (s > 0) classes.push_back({0, j - 1, s});
    const long t = fd.sinks(j);
    if (t < 0) fail(ErrorCode::kDomain, "divergence condition violated");
    if (t > 0) classes.push_back({j, fd.d, t});
  }
  std::vector<std::pair<Edge, int>> edge_classes;
  for (const Edge& e : fd.edges) {
    bool found = false;
    for (auto& [f, n] : edge_classes) {
      if (f == e) {
        ++n;
        found = true;
      }
    }
    if (!found) edge_classes.emplace_back(e, 1);
  }
  for (const auto& [e, n] : edge_classes) classes.push_back({e.from, e.to - 1, n});
  if (fd.free_elevators > 0) classes.push_back({0, fd.d, fd.free_elevators});

  const std::size_t k = classes.size();
  std::vector<std::size_t> stride(k);
  std::size_t states = static_cast<std::size_t>(fd.d + 1);
  for (std::size_t i = 0; i < k; ++i) {
    stride[i] = states;
    const std::size_t radix = static_cast<std::size_t>(classes[i].count + 1);
    if (states > state_limit / radix) {
      fail(ErrorCode::kLimit, "floor diagram too large for marking enumeration");
    }
    states *= radix;
  }
  std::vector<Integer> memo(states);
  std::vector<char> done(states, 0);
  std::vector<long> rem(k);
  for (std::size_t i = 0; i < k; ++i) rem[i] = classes[i].count;

  auto encode = [&](int f) {
    std::size_t idx = static_cast<std::size_t>(f);
    for (std::size_t i = 0; i < k; ++i) idx += static_cast<std::size_t>(rem[i]) * stride[i];
    return idx;
  };
  auto ways = [&](auto&& self, int f) -> Integer {
    const std::size_t idx = encode(f);
    if (done[idx]) return memo[idx];
    Integer total = 0;
    bool all_done = true;
    bool can_advance = f < fd.d;
    for (std::size_t i = 0; i < k; ++i) {
      if (rem[i] == 0) continue;
      all_done = false;
      if (classes[i].hi == f) can_advance = false;
      if (classes[i].lo <= f && f <= classes[i].hi) {
        --rem[i];
        total += self(self, f);
        ++rem[i];
      }
    }
    if (all_done && f == fd.d) total = 1;
    if (can_advance) total += self(self, f + 1);
    done[idx] = 1;
    memo[idx] = total;
    return total;
  };
  return ways(ways, 0);
}

YLaurent floor_diagram_count(int c, int m, int d, int delta, CountMode mode) {
  YLaurent total;
  for (const FloorDiagram& fd : enumerate_floor_diagrams(c, m, d, delta)) {
    total += fd.multiplicity(mode) * Rational(count_markings(fd));
  }
  return total;
}

}  // namespace refsev
