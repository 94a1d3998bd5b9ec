#pragma once

#include <optional>
#include <string>
#include <vector>

#include "caporaso/ch_recursion.hpp"

namespace refsev {

enum class ConjectureId {
  kRefpol,            // P2 and Sigma_m generating functions, refined
  kGSPSigmaW,         // the y = -1 specialization with the B-bar tables
  kRuledblow,         // Sigma_m with dH and the F^_{c_m} factor
  kConjanP112,        // A_1 factor eta(q)^2 / eta(q^2) on P(1,1,2)
  kBlowk,             // Sigma_2 with dH - kE and f-bar_{2k}
  kA1conSigma2,       // the same counts through f_{2k} on P(1,1,2)
  kP2blow,            // P2 with one m-fold point via Sigma_1
  kMultconH12,        // refined H_1, H_2
  kMultconH34AtPm1,   // H_1..H_4 at y = 1 and y = -1
};

std::vector<ConjectureId> all_conjectures();
std::string conjecture_name(ConjectureId id);
std::optional<ConjectureId> parse_conjecture(const std::string& name);

enum class VerdictStatus { kPass, kFail, kSkipped, kTypoCandidate };
std::string to_string(VerdictStatus s);

struct Verdict {
  std::string instance;
  VerdictStatus status = VerdictStatus::kPass;
  std::string detail;
};

struct ConjectureReport {
  std::string id;
  std::string range;
  std::string orders;
  std::vector<Verdict> verdicts;

  std::size_t count(VerdictStatus s) const;
  // True when nothing failed and at least one instance was compared.
  bool passed() const;
};

// Parameter ranges; negative values and empty lists select per-check defaults.
struct ConjectureRange {
  int delta_max = -1;
  int d_max = -1;
  std::vector<int> m_values;
  std::vector<int> two_k_values;  // blowk / A1con: the values of 2k
  // blowk, A1con, P2blow and multcon: use the printed validity bounds alone
  // instead of intersecting them with d - k >= 1 and delta <= d - m.
  bool literal_bounds = false;
};

ConjectureReport check_conjecture(ConjectureId id, const ConjectureRange& range,
                                  CHTable& table);

// Readable report line for each verdict plus a summary line.
std::string format_report(const ConjectureReport& r);

// Earliest differing y-exponent of two values, for mismatch reports.
std::string describe_mismatch(const YLaurent& lhs, const YLaurent& rhs);

}  // namespace refsev
