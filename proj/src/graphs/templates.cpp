#include "graphs/templates.hpp"

#include <map>
#include <mutex>

#include "graphs/orderings.hpp"
#include "ring/error.hpp"
#include "ring/linalg.hpp"

namespace refsev {

const std::vector<LongEdgeGraph>& templates_of_cogenus(int delta) {
  static std::mutex mu;
  static std::map<int, std::vector<LongEdgeGraph>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(delta);
  if (it != cache.end()) return it->second;
  std::vector<LongEdgeGraph> out;
  // A template of cogenus delta has length at most delta + 1.
  for (const LongEdgeGraph& g : enumerate_graphs(delta, delta + 1)) {
    if (g.is_template()) out.push_back(g);
  }
  return cache.emplace(delta, std::move(out)).first->second;
}

YLaurent q_log_count(const BetaSeq& beta, int delta, CountMode mode) {
  if (delta < 1) fail(ErrorCode::kInvalidArgument, "Q^delta needs delta >= 1");
  const int big_m = static_cast<int>(beta.size()) - 1;
  YLaurent total;
  for (const LongEdgeGraph& t : templates_of_cogenus(delta)) {
    Rational inner = 0;
    const int lo = 1 - t.epsilon0();
    const int hi = big_m - t.length() + t.epsilon1();
    for (int k = lo; k <= hi; ++k) inner += phi(t.shifted(k), beta, false);
    if (inner != 0) total += t.multiplicity(mode) * inner;
  }
  return total;
}

Rational BetaLinearForm::eval(const BetaSeq& beta) const {
  Rational v = constant;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    v += coeffs[i] * beta.at(static_cast<std::size_t>(first) + i);
  }
  return v;
}

BetaLinearForm fit_phi_linear(const LongEdgeGraph& g,
                              const std::vector<BetaSeq>& probes) {
  const int lo = g.minv();
  const int hi = g.maxv();
  const std::size_t vars = static_cast<std::size_t>(hi - lo + 1);
  RationalMatrix a;
  std::vector<YLaurent> b;
  for (const BetaSeq& beta : probes) {
    if (static_cast<int>(beta.size()) <= hi ||
        !is_allowable(g, beta, Allowability::kSemiallowable)) {
      fail(ErrorCode::kInvalidArgument, "probe does not make the graph semiallowable");
    }
    std::vector<Rational> row{Rational(1)};
    for (int i = lo; i <= hi; ++i) row.emplace_back(beta[static_cast<std::size_t>(i)]);
    a.push_back(std::move(row));
    b.emplace_back(phi(g, beta, false));
  }
  if (a.size() < vars + 1 || rank(a) < vars + 1) {
    fail(ErrorCode::kInvalidArgument, "probes do not determine the affine form");
  }
  auto x = solve_exact(a, b);
  if (!x) fail(ErrorCode::kDomain, "no affine form matches the probes");
  BetaLinearForm form;
  form.first = lo;
  form.constant = (*x)[0].coeff(0);
  for (std::size_t i = 1; i < x->size(); ++i) form.coeffs.push_back((*x)[i].coeff(0));
  return form;
}

}  // namespace refsev
