#pragma once

#include <vector>

#include "graphs/long_edge_graph.hpp"

namespace refsev {

// Templates of cogenus delta (minv = 0, interior vertices spanned).
const std::vector<LongEdgeGraph>& templates_of_cogenus(int delta);

// Q^delta_beta as a sum over templates and their admissible shifts.
YLaurent q_log_count(const BetaSeq& beta, int delta,
                     CountMode mode = CountMode::kRefined);

// Affine form constant + sum_i coeffs[i] * beta_{first + i}.
struct BetaLinearForm {
  int first = 0;
  Rational constant;
  std::vector<Rational> coeffs;

  Rational eval(const BetaSeq& beta) const;
};

// Fits Phi_beta(G) as an affine form in beta_minv .. beta_maxv. Every probe
// must make G beta-semiallowable and have length > maxv(G). Throws
// kInvalidArgument if the probes do not determine the form, kDomain if no
// affine form matches all probes.
BetaLinearForm fit_phi_linear(const LongEdgeGraph& g,
                              const std::vector<BetaSeq>& probes);

}  // namespace refsev
