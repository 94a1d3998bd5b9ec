#pragma once

#include <optional>
#include <string>
#include <vector>

namespace refsev {

enum class SeriesIdentity {
  kF0Theta,
  kF1Theta,
  kF2Theta,
  kFbarClosedForm,
  kEtaQuotientTheta2,
  kFhatC2IsTheta2,
  kThetaProduct,
  kJacobiTripleProduct,
  kDeltaTildeAtMinusOne,
  kDg2TildeAtMinusOne,
  kBAtMinusOneMatchesBar,
  kFhatGeneralLowOrder,
};

struct IdentityReport {
  std::string id;
  bool passed = false;
  int order = 0;  // truncation checked
  std::string detail;  // first discrepancy, when any
};

std::vector<SeriesIdentity> all_series_identities();
std::string identity_name(SeriesIdentity id);
std::optional<SeriesIdentity> parse_identity(const std::string& name);

// Evaluates both sides below q^order and reports the first discrepancy.
// For kFbarClosedForm, `lmax` bounds l; it is ignored otherwise.
IdentityReport verify_series_identity(SeriesIdentity id, int order, int lmax = 12);

}  // namespace refsev
