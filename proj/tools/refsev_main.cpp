#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "refsev/refsev.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Flag values as parsed; unset options stay out of the job JSON.
struct Flags {
  std::string surface = "p2";
  std::optional<long> c, m;
  std::optional<std::string> d;
  std::optional<std::string> k;
  std::optional<int> delta, delta_max, order;
  std::string y = "sym";
  std::string format = "text";
  std::optional<std::string> cache;
  bool no_cache = false;
  std::vector<long> alpha, beta;
  std::optional<std::string> family, name, id;
  std::optional<int> l, lmax, cmax, dmax, mmax, floor_max;
  bool literal_bounds = false;
  std::string job_file;
};

template <typename T>
void put(Json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

Json job_json(const std::string& command, const Flags& f) {
  Json j;
  j["command"] = command;
  j["surface"] = f.surface;
  put(j, "c", f.c);
  put(j, "m", f.m);
  put(j, "d", f.d);
  put(j, "k", f.k);
  put(j, "delta", f.delta);
  put(j, "deltamax", f.delta_max);
  j["y"] = f.y;
  put(j, "order", f.order);
  j["format"] = f.format;
  put(j, "cache", f.cache);
  if (!f.alpha.empty()) j["alpha"] = f.alpha;
  if (!f.beta.empty()) j["beta"] = f.beta;
  put(j, "family", f.family);
  put(j, "name", f.name);
  put(j, "l", f.l);
  put(j, "id", f.id);
  put(j, "lmax", f.lmax);
  put(j, "cmax", f.cmax);
  put(j, "dmax", f.dmax);
  put(j, "mmax", f.mmax);
  put(j, "floormax", f.floor_max);
  if (f.literal_bounds) j["literal_bounds"] = true;
  return j;
}

// Accepts a bare JobConfig object, a JSON output document (its "config"), or
// a text/CSV output whose first line is "# config {...}".
Json read_job_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read job file " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  const std::string marker = "# config ";
  if (text.rfind(marker, 0) == 0) {
    const auto end = text.find('\n');
    return Json::parse(text.substr(marker.size(), end - marker.size()));
  }
  Json j = Json::parse(text);
  if (j.is_object() && j.contains("config") && j.contains("result")) return j["config"];
  return j;
}

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--y", f.y, "y mode: sym, 1 or -1")->check(CLI::IsMember({"sym", "1", "-1"}));
  sub->add_option("--format", f.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--cache", f.cache, "persistent recursion cache file");
  sub->add_flag("--no-cache", f.no_cache, "ignore $REFSEV_CACHE_DIR");
}

void add_surface(CLI::App* sub, Flags& f) {
  sub->add_option("--surface", f.surface, "p2, p11m or sigma");
  sub->add_option("--c", f.c, "fibre coefficient (sigma)");
  sub->add_option("--m", f.m, "m of Sigma_m or P(1,1,m)");
  sub->add_option("--d", f.d, "degree, n or n/2");
  sub->add_option("--k", f.k, "exceptional multiplicity, n or n/2");
}

int run(const std::string& command, const Json& job, const Flags& f) {
  std::optional<std::string> cache = job.contains("cache")
                                         ? std::optional(job["cache"].get<std::string>())
                                         : std::nullopt;
  if (!cache && !f.no_cache) {
    if (const char* p = rsev_default_cache_path()) cache = p;
  }
  rsev_context* ctx = nullptr;
  rsev_status st = rsev_context_create(cache ? cache->c_str() : nullptr, &ctx);
  if (st != RSEV_OK) {
    std::cerr << "refsev: cannot open cache: " << rsev_status_name(st) << "\n";
    return st == RSEV_INVALID_ARGUMENT ? kExitUsage : kExitFailure;
  }
  rsev_result* result = nullptr;
  st = rsev_run_job(ctx, job.dump().c_str(), &result);
  int code = kExitOk;
  if (st != RSEV_OK) {
    std::cerr << "refsev " << command << ": " << rsev_status_name(st) << ": "
              << rsev_context_last_error(ctx) << "\n";
    code = st == RSEV_INVALID_ARGUMENT ? kExitUsage : kExitFailure;
  } else {
    std::cout << rsev_result_body(result);
    if (!rsev_result_passed(result)) code = kExitFailure;
  }
  rsev_result_destroy(result);
  rsev_context_destroy(ctx);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Refined Severi degrees, node polynomials and Welschinger numbers"};
  app.set_version_flag("--version", std::string(rsev_version()));
  app.require_subcommand(1);
  Flags f;

  auto* compute = app.add_subcommand("compute", "N^delta for one surface and line bundle");
  add_surface(compute, f);
  compute->add_option("--delta", f.delta, "number of nodes");
  compute->add_option("--deltamax", f.delta_max, "all delta from 0 to this");
  add_common(compute, f);

  auto* relative = app.add_subcommand("relative", "relative degree N^delta(alpha, beta)");
  add_surface(relative, f);
  relative->add_option("--delta", f.delta, "number of nodes")->required();
  relative->add_option("--alpha", f.alpha, "fixed tangency counts a_1 a_2 ...");
  relative->add_option("--beta", f.beta, "free tangency counts b_1 b_2 ...");
  add_common(relative, f);

  auto* fit = app.add_subcommand("fit-nodepoly", "fit and validate node polynomials");
  fit->add_option("--family", f.family, "p2, sigma, p1xp1 or p11m");
  fit->add_option("--surface", f.surface, "default family");
  fit->add_option("--deltamax", f.delta_max, "largest delta (default 3)");
  add_common(fit, f);

  auto* solve = app.add_subcommand("solve-B", "solve B1, B2 and compare with the tables");
  solve->add_option("--order", f.order, "truncation order");
  add_common(solve, f);

  auto* series = app.add_subcommand("series", "print a named q-series");
  series->add_option("--name", f.name, "series name")->required();
  series->add_option("--order", f.order, "truncation order (default 10)");
  series->add_option("--l", f.l, "index l of f_l and fbar_l");
  series->add_option("--m", f.m, "index m of H_m and Fhat_m");
  add_common(series, f);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--id", f.id, "suite id, or all")->required();
  verify->add_option("--order", f.order, "truncation order");
  verify->add_option("--lmax", f.lmax, "largest l for fbar");
  verify->add_option("--deltamax", f.delta_max, "largest delta");
  verify->add_option("--dmax", f.dmax, "largest d");
  verify->add_option("--cmax", f.cmax, "largest c (cross-engine)");
  verify->add_option("--mmax", f.mmax, "largest m (cross-engine)");
  verify->add_option("--floormax", f.floor_max, "floor-diagram bound on c, d (cross-engine)");
  verify->add_option("--family", f.family, "node polynomial family (nodepoly)");
  verify->add_flag("--literal-bounds", f.literal_bounds, "use the printed validity bounds");
  add_common(verify, f);

  auto* tables = app.add_subcommand("export-tables", "dump the embedded coefficient tables");
  add_common(tables, f);

  auto* rerun = app.add_subcommand("run", "rerun a job from an echoed config");
  rerun->add_option("job", f.job_file, "JSON file, an output file, or - for stdin")->required();
  rerun->add_flag("--no-cache", f.no_cache, "ignore $REFSEV_CACHE_DIR");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  Json job;
  if (sub == rerun) {
    try {
      job = read_job_file(f.job_file);
    } catch (const std::exception& e) {
      std::cerr << "refsev run: " << e.what() << "\n";
      return kExitUsage;
    }
    const std::string command = job.is_object() && job.contains("command") && job["command"].is_string()
                                    ? job["command"].get<std::string>()
                                    : "run";
    return run(command, job, f);
  }
  job = job_json(sub->get_name(), f);
  return run(sub->get_name(), job, f);
}
