#include "verify/conjectures.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "modular/named_series.hpp"
#include "modular/tables.hpp"
#include "ring/error.hpp"
#include "ring/linalg.hpp"
#include "verify/node_polynomial.hpp"
#include "verify/reform.hpp"

namespace refsev {

namespace {

struct NameEntry {
  ConjectureId id;
  const char* name;
};

constexpr NameEntry kNames[] = {
    {ConjectureId::kRefpol, "refpol"},
    {ConjectureId::kGSPSigmaW, "GSPSigmaW"},
    {ConjectureId::kRuledblow, "ruledblow"},
    {ConjectureId::kConjanP112, "conjan_P112"},
    {ConjectureId::kBlowk, "blowk"},
    {ConjectureId::kA1conSigma2, "A1con_sigma2"},
    {ConjectureId::kP2blow, "P2blow"},
    {ConjectureId::kMultconH12, "multcon_H12"},
    {ConjectureId::kMultconH34AtPm1, "multcon_H34_at_pm1"},
};

}  // namespace

std::vector<ConjectureId> all_conjectures() {
  std::vector<ConjectureId> out;
  for (const auto& e : kNames) out.push_back(e.id);
  return out;
}

std::string conjecture_name(ConjectureId id) {
  for (const auto& e : kNames) {
    if (e.id == id) return e.name;
  }
  return "?";
}

std::optional<ConjectureId> parse_conjecture(const std::string& name) {
  for (const auto& e : kNames) {
    if (name == e.name) return e.id;
  }
  return std::nullopt;
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::kPass:
      return "pass";
    case VerdictStatus::kFail:
      return "FAIL";
    case VerdictStatus::kSkipped:
      return "skipped";
    case VerdictStatus::kTypoCandidate:
      return "pass (typo candidate)";
  }
  return "?";
}

std::size_t ConjectureReport::count(VerdictStatus s) const {
  return static_cast<std::size_t>(std::count_if(
      verdicts.begin(), verdicts.end(), [s](const Verdict& v) { return v.status == s; }));
}

bool ConjectureReport::passed() const {
  return count(VerdictStatus::kFail) == 0 &&
         count(VerdictStatus::kPass) + count(VerdictStatus::kTypoCandidate) > 0;
}

std::string format_report(const ConjectureReport& r) {
  std::ostringstream os;
  for (const auto& v : r.verdicts) {
    os << r.id << "  " << v.instance << "  " << to_string(v.status);
    if (!v.detail.empty()) os << "  " << v.detail;
    os << "\n";
  }
  os << r.id << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.count(VerdictStatus::kPass)
     << " pass, " << r.count(VerdictStatus::kTypoCandidate) << " typo-candidate, "
     << r.count(VerdictStatus::kFail) << " fail, " << r.count(VerdictStatus::kSkipped)
     << " skipped; range " << r.range << "; " << r.orders << ")\n";
  return os.str();
}

std::string describe_mismatch(const YLaurent& lhs, const YLaurent& rhs) {
  const YLaurent diff = lhs - rhs;
  if (diff.is_zero()) return "";
  const int e = diff.min_dexp();
  std::ostringstream os;
  os << "first difference at y^(" << e << "/2): lhs " << to_string(lhs.coeff(e)) << ", rhs "
     << to_string(rhs.coeff(e)) << " [lhs " << lhs.to_string() << ", rhs " << rhs.to_string()
     << "]";
  return os.str();
}

namespace {

int pick(int value, int fallback) { return value < 0 ? fallback : value; }

std::vector<int> pick(const std::vector<int>& values, std::vector<int> fallback) {
  return values.empty() ? fallback : values;
}

std::string half(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

std::string delta_tag(int delta) { return " delta=" + std::to_string(delta); }

Verdict compare(const std::string& instance, const YLaurent& lhs, const YLaurent& rhs) {
  if (lhs == rhs) return {instance, VerdictStatus::kPass, ""};
  return {instance, VerdictStatus::kFail, describe_mismatch(lhs, rhs)};
}

Verdict failure_from(const std::string& instance, const Error& e) {
  return {instance, VerdictStatus::kFail, std::string("error: ") + e.what()};
}

int binom2(int m) { return m * (m + 1) / 2; }

// --- refpol -----------------------------------------------------------------

ConjectureReport check_refpol(const ConjectureRange& range, CHTable& table) {
  const int delta_max = pick(range.delta_max, 4);
  const int d_max = pick(range.d_max, 8);
  ConjectureReport rep;
  rep.id = "refpol";
  rep.range = "P2: delta<=" + std::to_string(delta_max) + ", delta<=d<=" + std::to_string(d_max) +
              "; Sigma_m: m<=2, delta<=min(" + std::to_string(delta_max) + ",3), c,d in [delta,delta+1]";
  rep.orders = "form (2) to t^" + std::to_string(delta_max) + ", B tables below q^18";
  const int order = delta_max + 1;
  const GfSeries s = gf_series(YMode::kSymbolic, order + 2);
  const QSeries one = QSeries::constant(1);

  const auto polys = fit_node_polynomials(NodeFamily::kP2, delta_max, YMode::kSymbolic, table);
  for (const auto& np : polys) {
    if (!np.validated) {
      rep.verdicts.push_back({"P2 node polynomial" + delta_tag(np.delta), VerdictStatus::kFail,
                              "fit rejected: " + np.detail});
    }
  }
  for (int d = 1; d <= d_max; ++d) {
    const QSeries gen = form2_series(s, gf_data(SurfaceBundle::p2(d)), one, order);
    for (int delta = 0; delta <= std::min(delta_max, d); ++delta) {
      rep.verdicts.push_back(compare("P2(d=" + std::to_string(d) + ")" + delta_tag(delta),
                                     polys[static_cast<std::size_t>(delta)].n.eval({d}),
                                     gen.coeff(delta)));
    }
  }
  const int sigma_delta = std::min(delta_max, 3);
  for (long m = 0; m <= 2; ++m) {
    for (int delta = 0; delta <= sigma_delta; ++delta) {
      const long lo = std::max(delta, 1);
      for (long c = lo; c <= lo + 1; ++c) {
        for (long d = lo; d <= lo + 1; ++d) {
          const SurfaceBundle b = SurfaceBundle::sigma(m, c, d);
          const QSeries gen = form2_series(s, gf_data(b), one, delta + 1);
          rep.verdicts.push_back(compare(b.describe() + delta_tag(delta),
                                         table.severi_degree(b, delta), gen.coeff(delta)));
        }
      }
    }
  }
  return rep;
}

// --- GSPSigmaW --------------------------------------------------------------

ConjectureReport check_gsp_sigma_w(const ConjectureRange& range, CHTable& table) {
  const int delta_max = pick(range.delta_max, 8);
  const int d_max = pick(range.d_max, 10);
  ConjectureReport rep;
  rep.id = "GSPSigmaW";
  rep.range = "P2: delta<=" + std::to_string(delta_max) + ", 1<=d<=" + std::to_string(d_max) +
              "; P1xP1: c,d<=3, delta<=min(" + std::to_string(delta_max) + ",3c,3d)";
  rep.orders = "form (2) at y=-1 to t^" + std::to_string(delta_max) +
               ", B-bar tables below q^31";
  const int order = delta_max + 1;
  const GfSeries s = gf_series(YMode::kMinusOne, order + 2);
  const QSeries one = QSeries::constant(1);
  const auto polys = fit_node_polynomials(NodeFamily::kP2, delta_max, YMode::kMinusOne, table);
  for (const auto& np : polys) {
    if (!np.validated) {
      rep.verdicts.push_back({"P2 node polynomial at y=-1" + delta_tag(np.delta),
                              VerdictStatus::kFail, "fit rejected: " + np.detail});
    }
  }
  for (int d = 1; d <= d_max; ++d) {
    const QSeries gen = form2_series(s, gf_data(SurfaceBundle::p2(d)), one, order);
    for (int delta = 0; delta <= delta_max; ++delta) {
      const std::string name = "P2(d=" + std::to_string(d) + ")" + delta_tag(delta);
      const YLaurent rhs = gen.coeff(delta);
      rep.verdicts.push_back(compare(name + " node polynomial",
                                     polys[static_cast<std::size_t>(delta)].n.eval({d}), rhs));
      if (3 * (d - 1) >= delta) {
        const Polygon p = SurfaceBundle::p2(d).polygon();
        rep.verdicts.push_back(
            compare(name + " Welschinger", YLaurent(Rational(table.welschinger_number(p, delta))),
                    rhs));
      }
    }
  }
  for (long c = 1; c <= 3; ++c) {
    for (long d = c; d <= 3; ++d) {
      const SurfaceBundle b = SurfaceBundle::sigma(0, c, d);
      const int top = static_cast<int>(std::min<long>(delta_max, 3 * std::min(c, d)));
      const QSeries gen = form2_series(s, gf_data(b), one, top + 1);
      for (int delta = 0; delta <= top; ++delta) {
        rep.verdicts.push_back(compare(
            b.describe() + delta_tag(delta),
            YLaurent(Rational(table.welschinger_number(b.polygon(), delta))), gen.coeff(delta)));
      }
    }
  }
  return rep;
}

// --- Sigma_m with dH (ruledblow, conjan) -------------------------------------

using RFactory = std::function<QSeries(int m, int k)>;

ConjectureReport check_sigma_dh(const std::string& id, const std::vector<int>& ms, int delta_cap,
                                int d_max, const RFactory& r_of, const std::string& r_name,
                                CHTable& table) {
  ConjectureReport rep;
  rep.id = id;
  std::ostringstream rng;
  rng << "m in {";
  for (std::size_t i = 0; i < ms.size(); ++i) rng << (i ? "," : "") << ms[i];
  rng << "}, 1<=d<=" << d_max << ", delta<=min(" << delta_cap << ",delta_m,d,2d-1)";
  rep.range = rng.str();
  rep.orders = "form (2), R = " + r_name;
  const GfSeries s = gf_series(YMode::kSymbolic, delta_cap + 3);
  for (int m : ms) {
    const int delta_m = m == 2 ? 8 : m == 3 ? 5 : m == 4 ? 4 : 3;
    QSeries r;
    int r_known = 0;
    try {
      r = r_of(m, delta_cap + 2);
      r_known = r.trunc();
    } catch (const Error& e) {
      rep.verdicts.push_back({"m=" + std::to_string(m), VerdictStatus::kSkipped, e.what()});
      continue;
    }
    for (int d = 1; d <= d_max; ++d) {
      const SurfaceBundle b = SurfaceBundle::sigma(m, 0, d);
      const int top = std::min({delta_cap, delta_m, d, 2 * d - 1, r_known - 1});
      if (top < 0) continue;
      const QSeries gen = form2_series(s, gf_data(b), r, top + 1);
      for (int delta = 0; delta <= top; ++delta) {
        rep.verdicts.push_back(
            compare(b.describe() + delta_tag(delta), table.severi_degree(b, delta), gen.coeff(delta)));
      }
    }
  }
  return rep;
}

QSeries fhat_r(int m, int k) { return fhat_cm(m, k); }

QSeries an_r(int m, int k) {
  if (m != 2) fail(ErrorCode::kInvalidArgument, "the A_1 factor applies to m = 2 only");
  const QSeries e = eta(k);
  return (e.pow(2) / e.substitute_power(2)).truncated(k);
}

// --- Sigma_2 with dH - kE (blowk, A1con) ---------------------------------

ConjectureReport check_sigma2_k(bool through_f_lower, const ConjectureRange& range,
                                CHTable& table) {
  const int delta_max = pick(range.delta_max, 2);
  const int dp_max = pick(range.d_max, 3);  // bound on d - k
  const auto two_ks = pick(range.two_k_values, {1, 2, 3, 4});
  ConjectureReport rep;
  rep.id = through_f_lower ? "A1con_sigma2" : "blowk";
  std::ostringstream rng;
  rng << "2k in {";
  for (std::size_t i = 0; i < two_ks.size(); ++i) rng << (i ? "," : "") << two_ks[i];
  const int dp_min = range.literal_bounds ? 0 : 1;
  rng << "}, " << dp_min << "<=d-k<=" << dp_max << ", delta<=min(" << delta_max << ",2(d-k)+1)";
  rep.range = rng.str();
  rep.orders = through_f_lower ? "form (2), R = f_{2k} DG~2^(-k^2), chi = (d+1)^2"
                               : "form (2), R = fbar_{2k}, chi = (d+1)^2 - k^2";
  const int order = delta_max + 1;
  const GfSeries s = gf_series(YMode::kSymbolic, order + 2);
  for (int two_k : two_ks) {
    const Rational k = make_rational(two_k, 2);
    QSeries r;
    if (through_f_lower) {
      const QSeries dg2 = dg2_tilde(order + 2);
      r = (f_lower(two_k, order + 2 + two_k * two_k) * dg2.pow(-k * k)).truncated(order + 1);
    } else {
      r = f_bar(two_k, order + 1);
    }
    for (int dp = dp_min; dp <= dp_max; ++dp) {
      const Rational d = Rational(dp) + k;
      const Polygon p{two_k, 2, dp};
      GfData data;
      data.k_squared = 8;
      data.lk = -4 * d;
      data.chi_l = through_f_lower ? Rational((d + 1) * (d + 1))
                                   : Rational((d + 1) * (d + 1) - k * k);
      data.chi_o = 1;
      const int top = std::min(delta_max, 2 * dp + 1);
      const QSeries gen = form2_series(s, data, r, top + 1);
      for (int delta = 0; delta <= top; ++delta) {
        const std::string name = "Sigma_2(d=" + half(2 * dp + two_k) + ",k=" + half(two_k) + ")" +
                                 delta_tag(delta);
        rep.verdicts.push_back(compare(name, table.severi_degree(p, delta), gen.coeff(delta)));
      }
    }
  }
  return rep;
}

// --- P2 with an m-fold point via Sigma_1 -------------------------------------

struct BlowupCase {
  int m;
  int delta_max;
  int d_min;
  int d_max;
  bool literal_bounds = false;
};

// LHS N^{(Sigma_1, (d-m)H + mF), delta}, RHS P2 data with R = H_m DG~2^(-C(m+1,2)).
void run_blowup(ConjectureReport& rep, YMode mode, const BlowupCase& bc, const QSeries& h_m,
                CHTable& table, VerdictStatus pass_status = VerdictStatus::kPass,
                const std::string& note = "") {
  const int order = bc.delta_max + 1;
  // R may start as low as q^(-C(m+1,2)), so the series need that many more terms.
  const GfSeries s = gf_series(mode, order + 3 + 2 * binom2(bc.m));
  const QSeries r = bc.m == 0 ? QSeries::constant(1)
                              : (h_m * s.dg2.pow(-binom2(bc.m))).truncated(order);
  for (int d = bc.d_min; d <= bc.d_max; ++d) {
    int top = std::min(bc.delta_max, 2 * d + 1 + binom2(bc.m));
    if (!bc.literal_bounds) top = std::min(top, d - bc.m);
    const Polygon p{bc.m, 1, d - bc.m};
    const QSeries gen = form2_series(s, gf_data(SurfaceBundle::p2(d)), r, top + 1);
    for (int delta = 0; delta <= top; ++delta) {
      std::ostringstream name;
      name << "P2(d=" << d << ",m=" << bc.m << ")" << (mode == YMode::kSymbolic ? "" : " y=")
           << (mode == YMode::kSymbolic ? "" : to_string(mode)) << delta_tag(delta);
      Verdict v = compare(name.str(), table.severi_degree(p, delta, mode), gen.coeff(delta));
      if (v.status == VerdictStatus::kPass && pass_status != VerdictStatus::kPass) {
        v.status = pass_status;
        v.detail = note;
      }
      rep.verdicts.push_back(std::move(v));
    }
  }
}

QSeries h_series(YMode mode, int m, int k, HReading reading = HReading::kAsPrinted) {
  if (mode == YMode::kSymbolic) return h_refined(m, k);
  if (mode == YMode::kOne) return h_at_one(m, k, reading);
  return h_at_minus_one(m, k, reading);
}

struct ReadingOption {
  HReading reading;
  const char* label;
};

// Alternative readings tried, in order, after the printed one fails.
std::vector<ReadingOption> alternative_readings(YMode mode, int m) {
  if (mode == YMode::kOne && m == 3) {
    return {{HReading::kFlipD3G2, "+13 D^3G_2/288 for -13 D^3G_2/288"}};
  }
  if (mode == YMode::kOne && m == 4) {
    return {{HReading::kMinusSign, "minus sign before 149 D^2G_6/26880"},
            {HReading::kG8, "D^4G_8/8211456 for D^4G_4/8211456"},
            {HReading::kMinusSignG8, "both alternatives"}};
  }
  if (mode == YMode::kMinusOne && m == 4) {
    return {{HReading::kFlipD3G2, "-D^3G_2/192 for +D^3G_2/192"}};
  }
  return {};
}

ConjectureReport check_p2blow(const ConjectureRange& range, CHTable& table) {
  const int delta_max = pick(range.delta_max, 4);
  const auto ms = pick(range.m_values, {0, 1});
  const int d_max = pick(range.d_max, delta_max + 2);
  ConjectureReport rep;
  rep.id = "P2blow";
  rep.range = "m in {0,1}, max(1,m)<=d<=" + std::to_string(d_max) + ", delta<=min(" +
              std::to_string(delta_max) + ",2d+1+m(m+1)/2" +
              (range.literal_bounds ? ")" : ",d-m)");
  rep.orders = "form (2), R = H_m DG~2^(-m(m+1)/2), B2^LK";
  const int k = delta_max + 4;
  const QSeries h1 = h_refined(1, k);
  const bool h1_matches = !h1.first_difference(dg2_tilde(k)).has_value();
  rep.verdicts.push_back({"H_1 = DG~2 (m=1 reduces to the P2 generating function)",
                          h1_matches ? VerdictStatus::kPass : VerdictStatus::kFail, ""});
  for (int m : ms) {
    if (m < 0 || m > 2) {
      rep.verdicts.push_back({"m=" + std::to_string(m), VerdictStatus::kSkipped,
                              "refined H_m is known for m <= 2"});
      continue;
    }
    const QSeries h = m == 0 ? QSeries::constant(1) : h_refined(m, k + binom2(m));
    run_blowup(rep, YMode::kSymbolic, {m, delta_max, std::max(1, m), d_max, range.literal_bounds},
               h, table);
  }
  return rep;
}

ConjectureReport check_multcon_h12(const ConjectureRange& range, CHTable& table) {
  const auto ms = pick(range.m_values, {1, 2});
  ConjectureReport rep;
  rep.id = "multcon_H12";
  rep.range = std::string("m=1: delta<=4; m=2: delta<=3; m<=d<=m+delta_max+1") +
              (range.literal_bounds ? ", delta<=2d+1+m(m+1)/2" : ", delta<=d-m");
  rep.orders = "form (2), refined H_1 = DG~2 and H_2 from F_1, F_2; B2^LK";
  const QSeries b1 = embedded_table(Table::kB1);
  const QSeries b2 = embedded_table(Table::kB2);
  for (int m : ms) {
    if (m < 1 || m > 2) {
      rep.verdicts.push_back({"m=" + std::to_string(m), VerdictStatus::kSkipped,
                              "refined H_m is known for m <= 2"});
      continue;
    }
    const int delta_max = pick(range.delta_max, m == 1 ? 4 : 3);
    const QSeries h = h_refined(m, delta_max + 4 + binom2(m));
    const int d_max = pick(range.d_max, m + delta_max + 1);
    run_blowup(rep, YMode::kSymbolic, {m, delta_max, m, d_max, range.literal_bounds}, h, table);
    // H_m / q^C(m+1,2) = B2^m / B1 mod q^(m+1)
    const QSeries lhs = h.shifted24(-24 * binom2(m)).truncated(m + 1);
    const QSeries rhs = (b2.pow(m) / b1).truncated(m + 1);
    const auto diff = lhs.first_difference(rhs);
    rep.verdicts.push_back({"H_" + std::to_string(m) + "/q^" + std::to_string(binom2(m)) +
                                " = B2^m/B1 mod q^" + std::to_string(m + 1),
                            diff ? VerdictStatus::kFail : VerdictStatus::kPass,
                            diff ? "first difference at q^" + std::to_string(*diff) : ""});
  }
  return rep;
}

ConjectureReport check_multcon_h34(const ConjectureRange& range, CHTable& table) {
  const int delta_max = pick(range.delta_max, 3);
  const auto ms = pick(range.m_values, {1, 2, 3, 4});
  ConjectureReport rep;
  rep.id = "multcon_H34_at_pm1";
  rep.range = "y in {1,-1}, m in {1..4}, m<=d<=m+delta_max+1, delta<=min(" +
              std::to_string(delta_max) + (range.literal_bounds ? ",2d+1+m(m+1)/2)" : ",d-m)");
  rep.orders = "form (2), R = H_m(+-1) DG2^(-m(m+1)/2); B tables at y=1, B-bar tables at y=-1";
  for (YMode mode : {YMode::kOne, YMode::kMinusOne}) {
    for (int m : ms) {
      if (m < 1 || m > 4) {
        rep.verdicts.push_back({"m=" + std::to_string(m), VerdictStatus::kSkipped,
                                "H_m(+-1) is known for 1 <= m <= 4"});
        continue;
      }
      const BlowupCase bc{m, delta_max, m, pick(range.d_max, m + delta_max + 1),
                          range.literal_bounds};
      const int k = delta_max + 4 + 2 * binom2(m);
      ConjectureReport trial;
      run_blowup(trial, mode, bc, h_series(mode, m, k), table);
      if (trial.count(VerdictStatus::kFail) > 0) {
        for (const ReadingOption& alt : alternative_readings(mode, m)) {
          ConjectureReport retry;
          run_blowup(retry, mode, bc, h_series(mode, m, k, alt.reading), table,
                     VerdictStatus::kTypoCandidate, std::string("reading: ") + alt.label);
          if (retry.count(VerdictStatus::kFail) == 0) {
            trial = std::move(retry);
            break;
          }
        }
      }
      rep.verdicts.insert(rep.verdicts.end(), trial.verdicts.begin(), trial.verdicts.end());
    }
  }
  return rep;
}

}  // namespace

ConjectureReport check_conjecture(ConjectureId id, const ConjectureRange& range,
                                  CHTable& table) {
  try {
    switch (id) {
      case ConjectureId::kRefpol:
        return check_refpol(range, table);
      case ConjectureId::kGSPSigmaW:
        return check_gsp_sigma_w(range, table);
      case ConjectureId::kRuledblow:
        return check_sigma_dh("ruledblow", pick(range.m_values, {2, 3, 4}),
                              pick(range.delta_max, 5), pick(range.d_max, 4), fhat_r,
                              "F^_{c_m}", table);
      case ConjectureId::kConjanP112:
        return check_sigma_dh("conjan_P112", {2}, pick(range.delta_max, 5), pick(range.d_max, 4),
                              an_r, "eta(q)^2/eta(q^2)", table);
      case ConjectureId::kBlowk:
        return check_sigma2_k(false, range, table);
      case ConjectureId::kA1conSigma2:
        return check_sigma2_k(true, range, table);
      case ConjectureId::kP2blow:
        return check_p2blow(range, table);
      case ConjectureId::kMultconH12:
        return check_multcon_h12(range, table);
      case ConjectureId::kMultconH34AtPm1:
        return check_multcon_h34(range, table);
    }
  } catch (const Error& e) {
    ConjectureReport rep;
    rep.id = conjecture_name(id);
    rep.verdicts.push_back(failure_from("setup", e));
    return rep;
  }
  fail(ErrorCode::kInternal, "unknown conjecture id");
}

}  // namespace refsev
