#include "cli/job.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "modular/identities.hpp"
#include "modular/named_series.hpp"
#include "modular/tables.hpp"
#include "ring/error.hpp"
#include "verify/conjectures.hpp"
#include "verify/cross_engine.hpp"
#include "verify/suites.hpp"

namespace refsev {

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::kJson:
      return "json";
    case OutputFormat::kCsv:
      return "csv";
    case OutputFormat::kText:
      return "text";
  }
  return "?";
}

std::optional<OutputFormat> parse_format(const std::string& name) {
  for (OutputFormat f : {OutputFormat::kJson, OutputFormat::kCsv, OutputFormat::kText}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::vector<std::string> job_commands() {
  return {"compute", "relative", "fit-nodepoly", "solve-B", "series", "verify", "export-tables"};
}

// --- JobConfig <-> JSON ------------------------------------------------------

namespace {

template <typename T>
void put(Json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::kInvalidArgument, what); }

template <typename T>
T get_as(const Json& v, const std::string& key) {
  try {
    return v.get<T>();
  } catch (const Json::exception&) {
    bad("job field '" + key + "' has the wrong type");
  }
}

}  // namespace

Json to_json(const JobConfig& job) {
  Json j;
  j["command"] = job.command;
  j["surface"] = job.surface;
  put(j, "c", job.c);
  put(j, "m", job.m);
  if (job.d) {
    // Plain integers stay numbers; half-integers are strings "n/2".
    const bool digits = !job.d->empty() && job.d->size() < 10 &&
                        std::all_of(job.d->begin(), job.d->end(), [](char ch) { return ch >= '0' && ch <= '9'; });
    if (digits) {
      j["d"] = std::stol(*job.d);
    } else {
      j["d"] = *job.d;
    }
  }
  put(j, "k", job.k);
  put(j, "delta", job.delta);
  put(j, "deltamax", job.delta_max);
  j["y"] = to_string(job.mode);
  put(j, "order", job.order);
  j["format"] = to_string(job.format);
  put(j, "cache", job.cache);
  if (!job.alpha.empty()) j["alpha"] = job.alpha;
  if (!job.beta.empty()) j["beta"] = job.beta;
  put(j, "family", job.family);
  put(j, "name", job.name);
  put(j, "l", job.l);
  put(j, "id", job.id);
  put(j, "lmax", job.lmax);
  put(j, "cmax", job.cmax);
  put(j, "dmax", job.dmax);
  put(j, "mmax", job.mmax);
  put(j, "floormax", job.floor_max);
  if (job.literal_bounds) j["literal_bounds"] = true;
  return j;
}

JobConfig job_from_json(const Json& j) {
  if (!j.is_object()) bad("job must be a JSON object");
  JobConfig job;
  const std::map<std::string, std::function<void(const Json&)>> fields = {
      {"command", [&](const Json& v) { job.command = get_as<std::string>(v, "command"); }},
      {"surface", [&](const Json& v) { job.surface = get_as<std::string>(v, "surface"); }},
      {"c", [&](const Json& v) { job.c = get_as<long>(v, "c"); }},
      {"m", [&](const Json& v) { job.m = get_as<long>(v, "m"); }},
      {"d",
       [&](const Json& v) {
         job.d = v.is_number_integer() ? std::to_string(get_as<long>(v, "d"))
                                       : get_as<std::string>(v, "d");
       }},
      {"k", [&](const Json& v) { job.k = get_as<std::string>(v, "k"); }},
      {"delta", [&](const Json& v) { job.delta = get_as<int>(v, "delta"); }},
      {"deltamax", [&](const Json& v) { job.delta_max = get_as<int>(v, "deltamax"); }},
      {"y",
       [&](const Json& v) {
         const auto mode = parse_ymode(get_as<std::string>(v, "y"));
         if (!mode) bad("y must be one of sym, 1, -1");
         job.mode = *mode;
       }},
      {"order", [&](const Json& v) { job.order = get_as<int>(v, "order"); }},
      {"format",
       [&](const Json& v) {
         const auto f = parse_format(get_as<std::string>(v, "format"));
         if (!f) bad("format must be one of json, csv, text");
         job.format = *f;
       }},
      {"cache", [&](const Json& v) { job.cache = get_as<std::string>(v, "cache"); }},
      {"alpha", [&](const Json& v) { job.alpha = get_as<std::vector<long>>(v, "alpha"); }},
      {"beta", [&](const Json& v) { job.beta = get_as<std::vector<long>>(v, "beta"); }},
      {"family", [&](const Json& v) { job.family = get_as<std::string>(v, "family"); }},
      {"name", [&](const Json& v) { job.name = get_as<std::string>(v, "name"); }},
      {"l", [&](const Json& v) { job.l = get_as<int>(v, "l"); }},
      {"id", [&](const Json& v) { job.id = get_as<std::string>(v, "id"); }},
      {"lmax", [&](const Json& v) { job.lmax = get_as<int>(v, "lmax"); }},
      {"cmax", [&](const Json& v) { job.cmax = get_as<int>(v, "cmax"); }},
      {"dmax", [&](const Json& v) { job.dmax = get_as<int>(v, "dmax"); }},
      {"mmax", [&](const Json& v) { job.mmax = get_as<int>(v, "mmax"); }},
      {"floormax", [&](const Json& v) { job.floor_max = get_as<int>(v, "floormax"); }},
      {"literal_bounds",
       [&](const Json& v) { job.literal_bounds = get_as<bool>(v, "literal_bounds"); }},
  };
  for (const auto& [key, value] : j.items()) {
    const auto it = fields.find(key);
    if (it == fields.end()) bad("unknown job field '" + key + "'");
    if (!value.is_null()) it->second(value);
  }
  return job;
}

// --- Output assembly -----------------------------------------------------------

namespace {

// Collects one result in all three formats; render() picks one.
struct Output {
  Json result = Json::object();
  std::ostringstream text;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  bool passed = true;

  void laurent_rows(const std::vector<std::string>& prefix, const YLaurent& v) {
    if (v.is_zero()) {
      auto row = prefix;
      row.insert(row.end(), {"0", "0", "1"});
      csv_rows.push_back(row);
      return;
    }
    for (const auto& t : v.terms()) {
      auto row = prefix;
      row.insert(row.end(), {std::to_string(t.dexp), t.coeff.get_num().get_str(),
                             t.coeff.get_den().get_str()});
      csv_rows.push_back(row);
    }
  }

  void series_rows(const std::vector<std::string>& prefix, const QSeries& s) {
    const int stop = s.exact() ? s.stored_end() : s.trunc();
    for (int n = s.lead(); n < stop; ++n) {
      auto row = prefix;
      row.push_back(std::to_string(n));
      laurent_rows(row, s.coeff(n));
    }
  }

  JobOutput render(const JobConfig& job) const {
    const Json config = to_json(job);
    JobOutput out;
    out.passed = passed;
    switch (job.format) {
      case OutputFormat::kJson: {
        Json doc{{"config", config}, {"result", result}, {"passed", passed}};
        out.body = doc.dump(2) + "\n";
        break;
      }
      case OutputFormat::kCsv: {
        std::ostringstream os;
        os << "# config " << config.dump() << "\n";
        for (std::size_t i = 0; i < csv_header.size(); ++i) os << (i ? "," : "") << csv_header[i];
        os << "\n";
        for (const auto& row : csv_rows) {
          for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
          os << "\n";
        }
        out.body = os.str();
        break;
      }
      case OutputFormat::kText:
        out.body = "# config " + config.dump() + "\n" + text.str();
        break;
    }
    return out;
  }
};

Json report_json(const ConjectureReport& r) {
  Json verdicts = Json::array();
  for (const Verdict& v : r.verdicts) {
    verdicts.push_back({{"instance", v.instance}, {"status", to_string(v.status)}, {"detail", v.detail}});
  }
  return {{"id", r.id},
          {"range", r.range},
          {"orders", r.orders},
          {"passed", r.passed()},
          {"pass", r.count(VerdictStatus::kPass)},
          {"typo_candidate", r.count(VerdictStatus::kTypoCandidate)},
          {"fail", r.count(VerdictStatus::kFail)},
          {"skipped", r.count(VerdictStatus::kSkipped)},
          {"verdicts", verdicts}};
}

void add_report(Output& out, const ConjectureReport& r) {
  out.result["reports"].push_back(report_json(r));
  out.text << format_report(r);
  for (const Verdict& v : r.verdicts) {
    out.csv_rows.push_back({r.id, v.instance, to_string(v.status), v.detail});
  }
  out.passed = out.passed && r.passed();
}

void add_identity(Output& out, const IdentityReport& r) {
  out.result["reports"].push_back(
      {{"id", r.id}, {"passed", r.passed}, {"order", r.order}, {"detail", r.detail}});
  out.text << r.id << ": " << (r.passed ? "PASS" : "FAIL") << " (below q^" << r.order << ")";
  if (!r.detail.empty()) out.text << "  " << r.detail;
  out.text << "\n";
  out.csv_rows.push_back({r.id, "below q^" + std::to_string(r.order), r.passed ? "pass" : "FAIL",
                          r.detail});
  out.passed = out.passed && r.passed;
}

// --- Surfaces ------------------------------------------------------------------

struct Target {
  Polygon polygon;
  std::string label;
};

long need(const std::optional<long>& v, const char* flag, const std::string& surface) {
  if (!v) bad("--" + std::string(flag) + " is required for surface " + surface);
  if (*v < 0) bad("--" + std::string(flag) + " must be >= 0");
  return *v;
}

// Nonnegative integer or half-integer given as "n" or "n/2".
Rational half_integer(const std::string& text, const char* flag) {
  Rational r;
  try {
    r = parse_rational(text);
  } catch (const Error&) {
    bad("--" + std::string(flag) + " must be an integer or a half-integer n/2");
  }
  if (r < 0 || (r.get_den() != 1 && r.get_den() != 2)) {
    bad("--" + std::string(flag) + " must be a nonnegative integer or half-integer");
  }
  return r;
}

Target target_of(const JobConfig& job) {
  long c = 0;
  long m = 1;
  if (!job.d) bad("--d is required for surface " + job.surface);
  const Rational d = half_integer(*job.d, "d");
  const Rational k = job.k ? half_integer(*job.k, "k") : Rational(0);
  std::string name;
  if (job.surface == "p2") {
    if (job.c || job.m) bad("surface p2 takes --d (and --k), not --c or --m");
    name = "P2";
  } else if (job.surface == "p11m") {
    if (job.c) bad("surface p11m takes --m and --d, not --c");
    m = need(job.m, "m", job.surface);
    if (m < 1) bad("surface p11m needs --m >= 1");
    name = "P(1,1," + std::to_string(m) + ")";
  } else if (job.surface == "sigma") {
    m = need(job.m, "m", job.surface);
    c = job.c ? need(job.c, "c", job.surface) : 0;
    name = "Sigma_" + std::to_string(m);
  } else {
    bad("unknown surface '" + job.surface + "' (expected p2, p11m or sigma)");
  }
  // dH + cF - kE = (d - k) H + (c + m k) F on Sigma_m (H = E + m F).
  const Rational dk = d - k;
  const Rational ck = Rational(c) + Rational(m) * k;
  if (dk.get_den() != 1 || ck.get_den() != 1 || dk < 0) {
    bad("--d and --k must leave d - k and c + m k nonnegative integers");
  }
  std::string label = name + "(";
  if (job.surface == "sigma") label += "c=" + std::to_string(c) + ",";
  label += "d=" + to_string(d) + ")";
  if (k != 0) label += "-" + to_string(k) + "E";
  return {Polygon{ck.get_num().get_si(), m, dk.get_num().get_si()}, label};
}

std::vector<int> delta_list(const JobConfig& job) {
  if (job.delta && job.delta_max) bad("give --delta or --deltamax, not both");
  if (job.delta) {
    if (*job.delta < 0) bad("--delta must be >= 0");
    return {*job.delta};
  }
  if (job.delta_max) {
    if (*job.delta_max < 0) bad("--deltamax must be >= 0");
    std::vector<int> out;
    for (int delta = 0; delta <= *job.delta_max; ++delta) out.push_back(delta);
    return out;
  }
  bad("--delta or --deltamax is required");
}

Json polygon_json(const Polygon& p) { return {{"c", p.c}, {"m", p.m}, {"d", p.d}}; }

// --- Commands --------------------------------------------------------------------

Output cmd_compute(const JobConfig& job, CHTable& table) {
  const Target t = target_of(job);
  Output out;
  out.result["surface"] = t.label;
  out.result["polygon"] = polygon_json(t.polygon);
  out.result["values"] = Json::array();
  out.csv_header = {"delta", "dexp", "num", "den"};
  for (int delta : delta_list(job)) {
    const YLaurent v = table.severi_degree(t.polygon, delta, job.mode);
    out.result["values"].push_back({{"delta", delta}, {"value", to_json(v)}});
    out.text << "N^(" << t.label << ", delta=" << delta << ")(y=" << to_string(job.mode)
             << ") = " << v.to_string() << "\n";
    out.laurent_rows({std::to_string(delta)}, v);
  }
  return out;
}

Output cmd_relative(const JobConfig& job, CHTable& table) {
  const Target t = target_of(job);
  if (!job.delta) bad("relative needs --delta");
  if (*job.delta < 0) bad("--delta must be >= 0");
  for (long a : job.alpha) {
    if (a < 0) bad("--alpha entries must be >= 0");
  }
  for (long b : job.beta) {
    if (b < 0) bad("--beta entries must be >= 0");
  }
  if (seq_weight(job.alpha) + seq_weight(job.beta) != t.polygon.bottom_length()) {
    bad("I alpha + I beta must equal the bottom edge length " +
        std::to_string(t.polygon.bottom_length()));
  }
  const YLaurent v = table.relative_degree(t.polygon, *job.delta, job.alpha, job.beta, job.mode);
  Output out;
  out.result = {{"surface", t.label},
                {"polygon", polygon_json(t.polygon)},
                {"delta", *job.delta},
                {"alpha", job.alpha},
                {"beta", job.beta},
                {"value", to_json(v)}};
  auto seq = [](const std::vector<long>& s) {
    std::string r = "(";
    for (std::size_t i = 0; i < s.size(); ++i) r += (i ? "," : "") + std::to_string(s[i]);
    return r + ")";
  };
  out.text << "N^(" << t.label << ", delta=" << *job.delta << ")(alpha=" << seq(job.alpha)
           << ", beta=" << seq(job.beta) << ")(y=" << to_string(job.mode) << ") = " << v.to_string()
           << "\n";
  out.csv_header = {"delta", "dexp", "num", "den"};
  out.laurent_rows({std::to_string(*job.delta)}, v);
  return out;
}

NodeFamily family_of(const JobConfig& job) {
  const std::string name = job.family ? *job.family : job.surface;
  const auto f = parse_node_family(name);
  if (!f) bad("unknown family '" + name + "' (expected p2, sigma, p1xp1 or p11m)");
  return *f;
}

Output cmd_fit(const JobConfig& job, CHTable& table) {
  const NodeFamily f = family_of(job);
  const int delta_max = job.delta_max.value_or(3);
  if (delta_max < 0) bad("--deltamax must be >= 0");
  std::vector<NodePolynomial> fits;
  const ConjectureReport rep = check_node_polynomials(f, delta_max, job.mode, table, {}, &fits);
  Output out;
  out.result["family"] = to_string(f);
  out.result["polynomials"] = Json::array();
  out.csv_header = {"kind", "delta", "monomial", "dexp", "num", "den"};
  for (const NodePolynomial& np : fits) {
    out.result["polynomials"].push_back(to_json(np));
    out.text << "Q_" << np.delta << " = " << np.q.to_string() << "\n";
    out.text << "N_" << np.delta << " = " << np.n.to_string() << "\n";
    if (np.delta > 0) {
      out.text << "  fitted on " << np.fitted_on.size() << " points, held out "
               << np.validated_on.size() << ": " << (np.validated ? "validated" : "NOT validated");
      if (!np.detail.empty()) out.text << " (" << np.detail << ")";
      out.text << "\n";
    }
    for (const char* kind : {"Q", "N"}) {
      const ParamPoly& p = kind[0] == 'Q' ? np.q : np.n;
      for (const auto& [mono, coeff] : p.terms()) {
        std::string mono_text;
        for (std::size_t i = 0; i < mono.size(); ++i) {
          if (mono[i] == 0) continue;
          if (!mono_text.empty()) mono_text += "*";
          mono_text += p.vars()[i] + (mono[i] > 1 ? "^" + std::to_string(mono[i]) : "");
        }
        out.laurent_rows({kind, std::to_string(np.delta), mono_text.empty() ? "1" : mono_text},
                         coeff);
      }
    }
  }
  out.passed = rep.passed() || delta_max == 0;
  return out;
}

Output cmd_solve_b(const JobConfig& job, CHTable& table) {
  const int order = job.order.value_or(job.mode == YMode::kMinusOne ? 9 : 5);
  if (order < 2) bad("--order must be >= 2");
  BSolution sol;
  const ConjectureReport rep = check_solve_b(job.mode, order, table, &sol);
  Output out;
  const std::string suffix = job.mode == YMode::kMinusOne ? "bar" : "";
  out.result["B1" + suffix] = to_json(sol.b1);
  out.result["B2" + suffix] = to_json(sol.b2);
  out.result["report"] = report_json(rep);
  out.text << "B1" << suffix << " = " << sol.b1.to_string(order) << "\n";
  out.text << "B2" << suffix << " = " << sol.b2.to_string(order) << "\n";
  out.text << format_report(rep);
  out.csv_header = {"series", "n", "dexp", "num", "den"};
  out.series_rows({"B1" + suffix}, sol.b1);
  out.series_rows({"B2" + suffix}, sol.b2);
  out.passed = rep.passed();
  return out;
}

}  // namespace

std::vector<std::string> series_names() {
  return {"G<w>", "Gbar<w>", "eta", "Delta", "theta", "theta2q2", "DG2tilde", "DDG2tilde",
          "Deltatilde", "f", "fbar", "fbar_closed", "H", "Fhat", "F0", "F1", "F2",
          "B1", "B2", "B1bar", "B2bar", "Fhat_c3", "Fhat_c4"};
}

namespace {

int need_int(const std::optional<int>& v, const char* flag, const std::string& name) {
  if (!v) bad("series " + name + " needs --" + flag);
  return *v;
}

std::optional<int> weight_suffix(const std::string& name, const std::string& prefix) {
  if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return std::nullopt;
  const std::string rest = name.substr(prefix.size());
  if (!std::all_of(rest.begin(), rest.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    return std::nullopt;
  }
  return std::stoi(rest);
}

QSeries named_series(const JobConfig& job, int k) {
  if (!job.name) bad("series needs --name");
  const std::string& name = *job.name;
  const std::map<std::string, Table> tables = {{"B1", Table::kB1},         {"B2", Table::kB2},
                                               {"B1bar", Table::kB1Bar},   {"B2bar", Table::kB2Bar},
                                               {"Fhat_c3", Table::kFhatC3}, {"Fhat_c4", Table::kFhatC4}};
  if (const auto it = tables.find(name); it != tables.end()) {
    const QSeries t = embedded_table(it->second);
    return k < t.trunc() ? t.truncated(k) : t;
  }
  if (name == "H") {
    const int m = static_cast<int>(job.m.value_or(0));
    if (job.mode == YMode::kSymbolic) return h_refined(m, k);
    return job.mode == YMode::kOne ? h_at_one(m, k) : h_at_minus_one(m, k);
  }
  if (const auto w = weight_suffix(name, "Gbar")) return eisenstein_bar(*w, k);
  if (const auto w = weight_suffix(name, "G")) return eisenstein(*w, k);
  const std::map<std::string, std::function<QSeries()>> plain = {
      {"eta", [k] { return eta(k); }},
      {"Delta", [k] { return discriminant(k); }},
      {"theta", [k] { return theta(k); }},
      {"theta2q2", [k] { return theta2_q2(k); }},
      {"DG2tilde", [k] { return dg2_tilde(k); }},
      {"DDG2tilde", [k] { return ddg2_tilde(k); }},
      {"Deltatilde", [k] { return delta_tilde(k); }},
      {"F0", [k] { return f0_divisor(k); }},
      {"F1", [k] { return f1_divisor(k); }},
      {"F2", [k] { return f2_divisor(k); }},
      {"f", [&job, k, &name] { return f_lower(need_int(job.l, "l", name), k); }},
      {"fbar", [&job, k, &name] { return f_bar(need_int(job.l, "l", name), k); }},
      {"fbar_closed", [&job, k, &name] { return f_bar_closed_form(need_int(job.l, "l", name), k); }},
      {"Fhat", [&job, k] { return fhat_cm(static_cast<int>(job.m.value_or(0)), k); }},
  };
  const auto it = plain.find(name);
  if (it == plain.end()) bad("unknown series '" + name + "'");
  QSeries s = it->second();
  if (job.mode == YMode::kOne) s = at_y(s, 1);
  if (job.mode == YMode::kMinusOne) s = at_y(s, -1);
  return s;
}

Output cmd_series(const JobConfig& job) {
  const int k = job.order.value_or(10);
  if (k < 1) bad("--order must be >= 1");
  const QSeries s = named_series(job, k);
  Output out;
  out.result["name"] = *job.name;
  out.result["series"] = to_json(s);
  const int terms = (s.exact() ? s.stored_end() : s.trunc()) - s.lead() + 1;
  out.text << *job.name << " = " << s.to_string(std::max(terms, 1)) << "\n";
  out.csv_header = {"n", "dexp", "num", "den"};
  out.series_rows({}, s);
  return out;
}

Output cmd_export_tables() {
  Output out;
  out.csv_header = {"table", "n", "dexp", "num", "den"};
  for (Table t : all_tables()) {
    const QSeries s = embedded_table(t);
    out.result[table_name(t)] = to_json(s);
    out.text << "== " << table_name(t) << " (known below q^" << s.trunc() << ")\n"
             << table_text(t);
    out.series_rows({table_name(t)}, s);
  }
  return out;
}

// --- verify ------------------------------------------------------------------------

ConjectureRange conjecture_range(const JobConfig& job) {
  ConjectureRange r;
  r.delta_max = job.delta_max.value_or(-1);
  r.d_max = job.dmax.value_or(-1);
  r.literal_bounds = job.literal_bounds;
  return r;
}

void verify_cross_engine(Output& out, const JobConfig& job, CHTable& table) {
  CrossEngineRange r;
  r.c_max = job.cmax.value_or(r.c_max);
  r.d_max = job.dmax.value_or(r.d_max);
  r.m_max = job.mmax.value_or(r.m_max);
  r.delta_max = job.delta_max.value_or(r.delta_max);
  r.mode = job.mode;
  r.floor_bound = job.floor_max.value_or(3);
  add_report(out, check_cross_engine(r, table));
}

void verify_one(Output& out, const std::string& id, const JobConfig& job, CHTable& table) {
  if (id == "fbar" || id == identity_name(SeriesIdentity::kFbarClosedForm)) {
    add_identity(out, verify_series_identity(SeriesIdentity::kFbarClosedForm, job.order.value_or(40),
                                             job.lmax.value_or(12)));
    return;
  }
  if (const auto sid = parse_identity(id)) {
    add_identity(out, verify_series_identity(*sid, job.order.value_or(15), job.lmax.value_or(12)));
    return;
  }
  if (const auto cid = parse_conjecture(id)) {
    add_report(out, check_conjecture(*cid, conjecture_range(job), table));
    return;
  }
  if (id == "cross-engine") {
    verify_cross_engine(out, job, table);
    return;
  }
  if (id == "solveB") {
    add_report(out, check_solve_b(job.mode, job.order.value_or(job.mode == YMode::kMinusOne ? 9 : 5),
                                  table));
    return;
  }
  if (id == "nodepoly") {
    const NodeFamily f = family_of(job);
    add_report(out, check_node_polynomials(f, job.delta_max.value_or(3), job.mode, table));
    return;
  }
  bad("unknown verify id '" + id + "'");
}

Output cmd_verify(const JobConfig& job, CHTable& table) {
  if (!job.id) bad("verify needs --id");
  Output out;
  out.result["reports"] = Json::array();
  out.csv_header = {"id", "instance", "status", "detail"};
  if (*job.id == "all") {
    JobConfig plain;
    plain.mode = job.mode;
    for (SeriesIdentity sid : all_series_identities()) verify_one(out, identity_name(sid), plain, table);
    for (ConjectureId cid : all_conjectures()) verify_one(out, conjecture_name(cid), plain, table);
    verify_one(out, "cross-engine", plain, table);
    verify_one(out, "solveB", plain, table);
    verify_one(out, "nodepoly", plain, table);
  } else {
    verify_one(out, *job.id, job, table);
  }
  return out;
}

}  // namespace

std::vector<std::string> verify_ids() {
  std::vector<std::string> ids{"all", "fbar"};
  for (SeriesIdentity sid : all_series_identities()) ids.push_back(identity_name(sid));
  for (ConjectureId cid : all_conjectures()) ids.push_back(conjecture_name(cid));
  ids.insert(ids.end(), {"cross-engine", "solveB", "nodepoly"});
  return ids;
}

JobOutput run_job(const JobConfig& job, CHTable& table) {
  Output out;
  if (job.command == "compute") {
    out = cmd_compute(job, table);
  } else if (job.command == "relative") {
    out = cmd_relative(job, table);
  } else if (job.command == "fit-nodepoly") {
    out = cmd_fit(job, table);
  } else if (job.command == "solve-B") {
    out = cmd_solve_b(job, table);
  } else if (job.command == "series") {
    out = cmd_series(job);
  } else if (job.command == "verify") {
    out = cmd_verify(job, table);
  } else if (job.command == "export-tables") {
    out = cmd_export_tables();
  } else {
    bad("unknown command '" + job.command + "'");
  }
  return out.render(job);
}

}  // namespace refsev
