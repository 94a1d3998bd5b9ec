#pragma once

#include <optional>
#include <string>
#include <vector>

#include "caporaso/ch_recursion.hpp"
#include "io/json_io.hpp"

namespace refsev {

enum class OutputFormat { kJson, kCsv, kText };
std::string to_string(OutputFormat f);
std::optional<OutputFormat> parse_format(const std::string& name);

// Everything a run depends on. Its JSON form is echoed at the top of every
// output, and running the echoed job again reproduces the output.
struct JobConfig {
  std::string command;  // one of job_commands()
  std::string surface = "p2";  // p2 | p11m | sigma
  std::optional<long> c;
  std::optional<long> m;
  std::optional<std::string> d;  // "n", or "n/2" together with a half-integer k
  std::optional<std::string> k;  // exceptional multiplicity, "n" or "n/2"
  std::optional<int> delta;
  std::optional<int> delta_max;
  YMode mode = YMode::kSymbolic;
  std::optional<int> order;
  OutputFormat format = OutputFormat::kText;
  std::optional<std::string> cache;
  std::vector<long> alpha;  // relative
  std::vector<long> beta;
  std::optional<std::string> family;  // fit-nodepoly: p2 | sigma | p1xp1 | p11m
  std::optional<std::string> name;    // series
  std::optional<int> l;               // series f, fbar
  std::optional<std::string> id;      // verify
  std::optional<int> lmax;
  std::optional<int> cmax;
  std::optional<int> dmax;
  std::optional<int> mmax;
  std::optional<int> floor_max;
  bool literal_bounds = false;

  friend bool operator==(const JobConfig&, const JobConfig&) = default;
};

Json to_json(const JobConfig& job);
// Rejects unknown keys and ill-typed values with kInvalidArgument.
JobConfig job_from_json(const Json& j);

struct JobOutput {
  std::string body;
  bool passed = true;  // false when a verification or held-out check failed
};

// Runs one job against `table`. Bad parameters throw kInvalidArgument.
JobOutput run_job(const JobConfig& job, CHTable& table);

std::vector<std::string> job_commands();
std::vector<std::string> series_names();
// "all", the identity names and "fbar", the conjecture names, "cross-engine",
// "solveB" and "nodepoly".
std::vector<std::string> verify_ids();

}  // namespace refsev
