#include "graphs/orderings.hpp"

#include <map>
#include <mutex>

#include "ring/error.hpp"
#include "ring/linalg.hpp"

namespace refsev {

namespace {

struct GapState {
  std::vector<long> shorts;                // pinned weight-1 edges per gap
  std::vector<std::vector<long>> parts;    // per gap: class multiplicities placed there
};

void distribute(const std::vector<std::pair<Edge, int>>& classes, std::size_t c,
                GapState& st, Integer& total) {
  if (c == classes.size()) {
    Integer term = 1;
    for (std::size_t g = 0; g < st.parts.size(); ++g) {
      long n = st.shorts[g];
      for (long k : st.parts[g]) n += k;
      if (n == st.shorts[g]) continue;
      Integer num = factorial(n);
      Integer den = factorial(st.shorts[g]);
      for (long k : st.parts[g]) den *= factorial(k);
      term *= num / den;
    }
    total += term;
    return;
  }
  const Edge& e = classes[c].first;
  const int count = classes[c].second;
  // Compositions of `count` over gaps e.from+1 .. e.to (gap g sits between
  // vertices g-1 and g).
  std::vector<int> gaps;
  for (int g = e.from + 1; g <= e.to; ++g) gaps.push_back(g);
  std::vector<long> alloc(gaps.size(), 0);
  auto rec = [&](auto&& self, std::size_t idx, long left) -> void {
    if (idx + 1 == gaps.size()) {
      alloc[idx] = left;
      for (std::size_t k = 0; k < gaps.size(); ++k) {
        if (alloc[k] > 0) st.parts[static_cast<std::size_t>(gaps[k])].push_back(alloc[k]);
      }
      distribute(classes, c + 1, st, total);
      for (std::size_t k = gaps.size(); k-- > 0;) {
        if (alloc[k] > 0) st.parts[static_cast<std::size_t>(gaps[k])].pop_back();
      }
      return;
    }
    for (long a = 0; a <= left; ++a) {
      alloc[idx] = a;
      self(self, idx + 1, left - a);
    }
  };
  rec(rec, 0, count);
}

}  // namespace

Integer count_orderings(const LongEdgeGraph& g, const BetaSeq& beta, bool strict) {
  if (!is_allowable(g, beta, strict ? Allowability::kStrict : Allowability::kAllowable)) {
    return 0;
  }
  if (g.empty()) return 1;
  const int big_m = static_cast<int>(beta.size()) - 1;
  GapState st;
  st.shorts.assign(static_cast<std::size_t>(big_m + 2), 0);
  st.parts.assign(static_cast<std::size_t>(big_m + 2), {});
  for (int j = 1; j <= big_m + 1; ++j) {
    st.shorts[static_cast<std::size_t>(j)] = beta[static_cast<std::size_t>(j - 1)] - g.lambda(j);
  }
  Integer total = 0;
  distribute(g.edge_classes(), 0, st, total);
  return total;
}

Rational phi(const LongEdgeGraph& g, const BetaSeq& beta, bool strict) {
  if (g.empty()) return 0;
  const auto classes = g.edge_classes();
  const std::size_t r = classes.size();
  // Mixed-radix indexing of sub-multisets nu <= mu.
  std::vector<std::size_t> radix(r), stride(r);
  std::size_t total = 1;
  for (std::size_t i = 0; i < r; ++i) {
    radix[i] = static_cast<std::size_t>(classes[i].second) + 1;
    stride[i] = total;
    total *= radix[i];
  }
  auto digits = [&](std::size_t idx) {
    std::vector<int> d(r);
    for (std::size_t i = 0; i < r; ++i) d[i] = static_cast<int>((idx / stride[i]) % radix[i]);
    return d;
  };
  std::vector<Rational> f(total), l(total);
  std::vector<int> size(total, 0);
  for (std::size_t idx = 1; idx < total; ++idx) {
    const auto d = digits(idx);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < r; ++i) {
      for (int k = 0; k < d[i]; ++k) edges.push_back(classes[i].first);
      size[idx] += d[i];
    }
    f[idx] = Rational(count_orderings(LongEdgeGraph(std::move(edges)), beta, strict));
  }
  f[0] = 1;
  // |mu| L_mu = |mu| F_mu - sum_{0 < nu < mu} F_{mu - nu} |nu| L_nu.
  for (std::size_t idx = 1; idx < total; ++idx) {
    const auto d = digits(idx);
    Rational acc = f[idx] * size[idx];
    std::vector<int> nu(r, 0);
    for (;;) {
      std::size_t i = 0;
      while (i < r && nu[i] == d[i]) nu[i++] = 0;
      if (i == r) break;
      ++nu[i];
      std::size_t nu_idx = 0;
      bool proper = false;
      for (std::size_t k = 0; k < r; ++k) {
        nu_idx += static_cast<std::size_t>(nu[k]) * stride[k];
        if (nu[k] != d[k]) proper = true;
      }
      if (!proper) continue;
      acc -= f[idx - nu_idx] * size[nu_idx] * l[nu_idx];
    }
    l[idx] = acc / size[idx];
  }
  return l[total - 1];
}

const std::vector<LongEdgeGraph>& graphs_of_cogenus(int delta, int maxv_bound) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<LongEdgeGraph>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(delta, maxv_bound);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, enumerate_graphs(delta, maxv_bound)).first;
  }
  return it->second;
}

YLaurent refined_count(const BetaSeq& beta, int delta, CountMode mode) {
  if (beta.empty()) fail(ErrorCode::kInvalidArgument, "empty beta sequence");
  const int bound = static_cast<int>(beta.size());
  YLaurent total;
  for (const LongEdgeGraph& g : graphs_of_cogenus(delta, bound)) {
    const Integer p = count_orderings(g, beta, true);
    if (p == 0) continue;
    total += g.multiplicity(mode) * Rational(p);
  }
  return total;
}

}  // namespace refsev
