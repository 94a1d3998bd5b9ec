#include "doctest.h"

#include "caporaso/ch_recursion.hpp"
#include "cli/job.hpp"
#include "io/cache_store.hpp"
#include "io/json_io.hpp"
#include "modular/named_series.hpp"
#include "ring/error.hpp"
#include "verify/node_polynomial.hpp"

using namespace refsev;

namespace {

YLaurent y_pow(int dexp) { return YLaurent::monomial(1, dexp); }

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("Laurent and series JSON round trips") {
  const YLaurent v = y_pow(3) * make_rational(-7, 3) + YLaurent(5) + y_pow(-1);
  CHECK(laurent_from(to_json(v)) == v);
  CHECK(laurent_from_json(laurent_to_json(v)) == v);
  CHECK(laurent_from(to_json(YLaurent())).is_zero());
  CHECK_THROWS_AS(laurent_from(Json::object()), Error);

  const QSeries s = dg2_tilde(7);
  const QSeries back = qseries_from(to_json(s));
  CHECK(back.trunc() == 7);
  CHECK_FALSE(back.first_difference(s).has_value());
  const QSeries e = eta(6);
  CHECK(qseries_from(to_json(e)).offset24() == 1);
  const QSeries exact = QSeries::constant(3);
  CHECK(qseries_from(to_json(exact)).exact());
}

TEST_CASE("node polynomial JSON round trip") {
  CHTable table;
  const auto fits = fit_node_polynomials(NodeFamily::kP2, 2, YMode::kSymbolic, table);
  for (const auto& np : fits) {
    CHECK(node_polynomial_from(to_json(np)) == np);
    CHECK(param_poly_from(to_json(np.q)) == np.q);
  }
}

TEST_CASE("checksums") {
  // FNV-1a 64-bit reference values.
  CHECK(fnv1a64_hex("") == "cbf29ce484222325");
  CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("job configs round trip through JSON") {
  JobConfig job;
  job.command = "compute";
  job.surface = "sigma";
  job.c = 1;
  job.m = 2;
  job.d = "3";
  job.k = "1/2";
  job.delta_max = 2;
  job.mode = YMode::kMinusOne;
  job.format = OutputFormat::kCsv;
  job.alpha = {1, 0, 2};
  job.literal_bounds = true;
  CHECK(job_from_json(to_json(job)) == job);
  CHECK_THROWS_AS(job_from_json(Json{{"command", "compute"}, {"colour", 3}}), Error);
  CHECK_THROWS_AS(job_from_json(Json{{"command", "compute"}, {"d", true}}), Error);
  CHECK_THROWS_AS(job_from_json(Json{{"command", "compute"}, {"y", "2"}}), Error);
  CHECK_THROWS_AS(job_from_json(Json::array()), Error);
}

TEST_CASE("compute jobs") {
  CHTable table;
  JobConfig job;
  job.command = "compute";
  job.d = "3";
  job.delta = 1;
  job.mode = YMode::kOne;
  const JobOutput text = run_job(job, table);
  CHECK(text.passed);
  CHECK(text.body.find("= 12\n") != std::string::npos);

  // The echoed config reproduces the run.
  const std::string header = first_line(text.body);
  REQUIRE(header.rfind("# config ", 0) == 0);
  const JobConfig echoed = job_from_json(Json::parse(header.substr(9)));
  CHECK(echoed == job);
  CHECK(run_job(echoed, table).body == text.body);

  job.format = OutputFormat::kJson;
  const Json doc = Json::parse(run_job(job, table).body);
  CHECK(job_from_json(doc.at("config")) == job);
  CHECK(laurent_from(doc.at("result").at("values").at(0).at("value")) == YLaurent(12));

  job.format = OutputFormat::kCsv;
  job.mode = YMode::kSymbolic;
  const std::string csv = run_job(job, table).body;
  CHECK(csv.find("delta,dexp,num,den\n1,-2,1,1\n1,0,10,1\n1,2,1,1\n") != std::string::npos);
}

TEST_CASE("surface encodings in jobs") {
  CHTable table;
  JobConfig job;
  job.command = "compute";
  job.format = OutputFormat::kJson;
  job.delta = 0;
  auto polygon = [&](const JobConfig& j) {
    const Json p = Json::parse(run_job(j, table).body).at("result").at("polygon");
    return Polygon{p.at("c").get<long>(), p.at("m").get<long>(), p.at("d").get<long>()};
  };
  job.d = "4";
  CHECK(polygon(job) == Polygon{0, 1, 4});
  job.k = "1";
  CHECK(polygon(job) == Polygon{1, 1, 3});
  job.surface = "sigma";
  job.m = 2;
  job.c = 0;
  job.d = "7/2";
  job.k = "3/2";
  CHECK(polygon(job) == Polygon{3, 2, 2});
  job.k = "5/2";
  CHECK(polygon(job) == Polygon{5, 2, 1});
  job.d = "3";
  job.k = "3/2";
  CHECK_THROWS_AS(run_job(job, table), Error);
  job.k = "4";
  CHECK_THROWS_AS(run_job(job, table), Error);
  job.k.reset();
  job.surface = "p11m";
  job.c.reset();
  CHECK(polygon(job) == Polygon{0, 2, 3});
  job.surface = "nowhere";
  CHECK_THROWS_AS(run_job(job, table), Error);
}

TEST_CASE("parameter validation") {
  CHTable table;
  JobConfig job;
  job.command = "compute";
  CHECK_THROWS_AS(run_job(job, table), Error);  // no d
  job.d = "3";
  CHECK_THROWS_AS(run_job(job, table), Error);  // no delta
  job.delta = -1;
  CHECK_THROWS_AS(run_job(job, table), Error);
  job.command = "launch";
  CHECK_THROWS_AS(run_job(job, table), Error);
  JobConfig rel;
  rel.command = "relative";
  rel.d = "3";
  rel.delta = 1;
  rel.beta = {2};
  CHECK_THROWS_AS(run_job(rel, table), Error);
  rel.beta = {3};
  CHECK(run_job(rel, table).body.find("y + 10 + y^-1") != std::string::npos);
}

TEST_CASE("verify, series and table jobs") {
  CHTable table;
  JobConfig job;
  job.command = "verify";
  job.id = "fbar";
  job.lmax = 6;
  job.order = 20;
  CHECK(run_job(job, table).passed);
  job.id = "no-such-suite";
  CHECK_THROWS_AS(run_job(job, table), Error);

  JobConfig series;
  series.command = "series";
  series.name = "theta2q2";
  series.order = 5;
  CHECK(run_job(series, table).body.find("(-2)*q^1") != std::string::npos);
  series.name = "fbar";
  CHECK_THROWS_AS(run_job(series, table), Error);  // needs l

  JobConfig tables;
  tables.command = "export-tables";
  tables.format = OutputFormat::kJson;
  const Json doc = Json::parse(run_job(tables, table).body);
  for (const char* name : {"B1", "B2", "B1bar", "B2bar", "Fhat_c3", "Fhat_c4"}) {
    CHECK(doc.at("result").contains(name));
  }
}
