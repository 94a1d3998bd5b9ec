#include "modular/identities.hpp"

#include <algorithm>

#include "modular/named_series.hpp"
#include "modular/tables.hpp"
#include "ring/error.hpp"

namespace refsev {

namespace {

IdentityReport compare(const std::string& id, const QSeries& lhs, const QSeries& rhs, int order) {
  IdentityReport r{id, true, order, ""};
  const QSeries a = lhs.truncated(order);
  const QSeries b = rhs.truncated(order);
  if (a.offset24() != b.offset24() && !(a.is_zero_to_precision() && b.is_zero_to_precision())) {
    r.passed = false;
    r.detail = "offsets differ: " + std::to_string(a.offset24()) + "/24 vs " +
               std::to_string(b.offset24()) + "/24";
    return r;
  }
  if (std::min(a.trunc(), b.trunc()) < order) {
    r.passed = false;
    r.detail = "only known below q^" + std::to_string(std::min(a.trunc(), b.trunc()));
    return r;
  }
  if (auto n = a.first_difference(b)) {
    r.passed = false;
    r.detail = "q^" + std::to_string(*n) + ": " + a.coeff(*n).to_string() + " vs " +
               b.coeff(*n).to_string();
  }
  return r;
}

}  // namespace

std::vector<SeriesIdentity> all_series_identities() {
  return {SeriesIdentity::kF0Theta,           SeriesIdentity::kF1Theta,
          SeriesIdentity::kF2Theta,           SeriesIdentity::kFbarClosedForm,
          SeriesIdentity::kEtaQuotientTheta2, SeriesIdentity::kFhatC2IsTheta2,
          SeriesIdentity::kThetaProduct,      SeriesIdentity::kJacobiTripleProduct,
          SeriesIdentity::kDeltaTildeAtMinusOne, SeriesIdentity::kDg2TildeAtMinusOne,
          SeriesIdentity::kBAtMinusOneMatchesBar, SeriesIdentity::kFhatGeneralLowOrder};
}

std::string identity_name(SeriesIdentity id) {
  switch (id) {
    case SeriesIdentity::kF0Theta:
      return "F0_theta";
    case SeriesIdentity::kF1Theta:
      return "F1_theta";
    case SeriesIdentity::kF2Theta:
      return "F2_theta";
    case SeriesIdentity::kFbarClosedForm:
      return "fbar_closed_form";
    case SeriesIdentity::kEtaQuotientTheta2:
      return "eta_quotient_theta2";
    case SeriesIdentity::kFhatC2IsTheta2:
      return "Fhat_c2_is_theta2";
    case SeriesIdentity::kThetaProduct:
      return "theta_product";
    case SeriesIdentity::kJacobiTripleProduct:
      return "jacobi_triple_product";
    case SeriesIdentity::kDeltaTildeAtMinusOne:
      return "delta_tilde_at_minus_one";
    case SeriesIdentity::kDg2TildeAtMinusOne:
      return "dg2_tilde_at_minus_one";
    case SeriesIdentity::kBAtMinusOneMatchesBar:
      return "B_at_minus_one_matches_bar";
    case SeriesIdentity::kFhatGeneralLowOrder:
      return "Fhat_general_low_order";
  }
  return "";
}

std::optional<SeriesIdentity> parse_identity(const std::string& name) {
  for (SeriesIdentity id : all_series_identities()) {
    if (identity_name(id) == name) return id;
  }
  if (name == "fbar") return SeriesIdentity::kFbarClosedForm;
  return std::nullopt;
}

IdentityReport verify_series_identity(SeriesIdentity id, int order, int lmax) {
  const std::string name = identity_name(id);
  const int k = order + 2;
  switch (id) {
    case SeriesIdentity::kF0Theta:
      return compare(name, f0_divisor(k), f0_theta(k), order);
    case SeriesIdentity::kF1Theta:
      return compare(name, f1_divisor(k), f1_theta(k), order);
    case SeriesIdentity::kF2Theta:
      return compare(name, f2_divisor(k).scaled(s_squared()), s2_f2_theta(k), order);
    case SeriesIdentity::kFbarClosedForm: {
      for (int l = 0; l <= lmax; ++l) {
        const QSeries theta_side = f_bar(l, k);
        IdentityReport r = compare(name, theta_side, f_bar_closed_form(l, k), order);
        if (!r.passed) {
          r.detail = "l=" + std::to_string(l) + " " + r.detail;
          return r;
        }
        if (l >= 1) {
          const int upto = std::min(l + 1, order);
          r = compare(name, theta_side.truncated(upto), QSeries::constant(1), upto);
          if (!r.passed) {
            r.detail = "l=" + std::to_string(l) + " not 1 mod q^" + std::to_string(l + 1) + ": " + r.detail;
            r.order = order;
            return r;
          }
        }
      }
      return {name, true, order, ""};
    }
    case SeriesIdentity::kEtaQuotientTheta2: {
      const QSeries e = eta(k);
      return compare(name, e * e / eta(k).substitute_power(2), theta2_q2(k), order);
    }
    case SeriesIdentity::kFhatC2IsTheta2:
      return compare(name, fhat_cm(2, k), theta2_q2(k), order);
    case SeriesIdentity::kThetaProduct:
      return compare(name, theta_normalized(k), theta_normalized_product(k), order);
    case SeriesIdentity::kJacobiTripleProduct:
      return compare(name, eta(k).substitute_power(2).pow(3), eta_q2_cubed(k), order);
    case SeriesIdentity::kDeltaTildeAtMinusOne: {
      const QSeries e = eta(k);
      const QSeries e2 = eta(k).substitute_power(2);
      return compare(name, at_y(delta_tilde(k), -1), e.pow(16) * e2.pow(4), order);
    }
    case SeriesIdentity::kDg2TildeAtMinusOne:
      return compare(name, at_y(dg2_tilde(k), -1), eisenstein_bar(2, k), order);
    case SeriesIdentity::kBAtMinusOneMatchesBar: {
      const int common = std::min(order, embedded_table(Table::kB1).trunc());
      IdentityReport r = compare(name, at_y(embedded_table(Table::kB1), -1),
                                 embedded_table(Table::kB1Bar), common);
      if (!r.passed) {
        r.detail = "B1: " + r.detail;
        return r;
      }
      r = compare(name, at_y(embedded_table(Table::kB2), -1), embedded_table(Table::kB2Bar), common);
      if (!r.passed) r.detail = "B2: " + r.detail;
      return r;
    }
    case SeriesIdentity::kFhatGeneralLowOrder: {
      const int upto = std::min(order, 4);
      for (int m = 2; m <= 4; ++m) {
        IdentityReport r = compare(name, fhat_cm_general(m), fhat_cm(m, 4), upto);
        if (!r.passed) {
          r.detail = "m=" + std::to_string(m) + " " + r.detail;
          return r;
        }
      }
      return {name, true, upto, ""};
    }
  }
  fail(ErrorCode::kInternal, "unknown identity");
}

}  // namespace refsev
