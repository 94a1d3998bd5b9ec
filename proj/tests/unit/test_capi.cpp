#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <string>

#include "refsev/refsev.h"

namespace {

struct Context {
  rsev_context* ctx = nullptr;
  explicit Context(const char* cache = nullptr) { REQUIRE(rsev_context_create(cache, &ctx) == RSEV_OK); }
  ~Context() { rsev_context_destroy(ctx); }
};

std::string text_of(rsev_context* ctx, long c, long m, long d, int delta, rsev_ymode mode) {
  rsev_laurent* v = nullptr;
  REQUIRE(rsev_severi_degree(ctx, c, m, d, delta, mode, &v) == RSEV_OK);
  std::string s = rsev_laurent_text(v);
  rsev_laurent_destroy(v);
  return s;
}

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(rsev_status_name(RSEV_OK)) == "ok");
  CHECK(std::string(rsev_status_name(RSEV_INVALID_ARGUMENT)) == "invalid argument");
  CHECK(std::string(rsev_version()).size() > 0);
}

TEST_CASE("typed Severi degree access") {
  Context c;
  rsev_laurent* v = nullptr;
  REQUIRE(rsev_severi_degree(c.ctx, 0, 1, 3, 1, RSEV_Y_SYMBOLIC, &v) == RSEV_OK);
  REQUIRE(rsev_laurent_size(v) == 3);
  CHECK(rsev_laurent_dexp(v, 0) == -2);
  CHECK(std::string(rsev_laurent_coeff(v, 0)) == "1");
  CHECK(rsev_laurent_dexp(v, 1) == 0);
  CHECK(std::string(rsev_laurent_coeff(v, 1)) == "10");
  CHECK(std::string(rsev_laurent_coeff(v, 7)) == "");
  rsev_laurent_destroy(v);
  CHECK(text_of(c.ctx, 0, 1, 3, 1, RSEV_Y_ONE) == "12");
  CHECK(text_of(c.ctx, 0, 1, 3, 1, RSEV_Y_MINUS_ONE) == "8");
  CHECK(text_of(c.ctx, 0, 1, 4, 3, RSEV_Y_ONE) == "675");
}

TEST_CASE("errors become status codes") {
  Context c;
  rsev_laurent* v = nullptr;
  CHECK(rsev_severi_degree(c.ctx, -1, 1, 3, 1, RSEV_Y_ONE, &v) == RSEV_INVALID_ARGUMENT);
  CHECK(v == nullptr);
  CHECK(std::string(rsev_context_last_error(c.ctx)).size() > 0);
  CHECK(rsev_severi_degree(nullptr, 0, 1, 3, 1, RSEV_Y_ONE, &v) == RSEV_INVALID_ARGUMENT);

  rsev_result* r = nullptr;
  CHECK(rsev_run_job(c.ctx, "{not json", &r) == RSEV_INVALID_ARGUMENT);
  CHECK(r == nullptr);
  CHECK(rsev_run_job(c.ctx, R"({"command":"compute","surface":"nowhere","d":3,"delta":1})", &r) ==
        RSEV_INVALID_ARGUMENT);
  CHECK(std::string(rsev_context_last_error(c.ctx)).find("nowhere") != std::string::npos);
  CHECK(rsev_run_job(c.ctx, R"({"command":"series","name":"H","m":7,"y":"1"})", &r) != RSEV_OK);
  CHECK(rsev_run_job(c.ctx, nullptr, &r) == RSEV_INVALID_ARGUMENT);
}

TEST_CASE("jobs through the C API") {
  Context c;
  rsev_result* r = nullptr;
  REQUIRE(rsev_run_job(c.ctx, R"({"command":"compute","d":3,"delta":1,"y":"1"})", &r) == RSEV_OK);
  CHECK(rsev_result_passed(r) == 1);
  const std::string body = rsev_result_body(r);
  CHECK(body.rfind("# config ", 0) == 0);
  CHECK(body.find("= 12") != std::string::npos);
  CHECK(std::string(rsev_context_last_error(c.ctx)).empty());
  rsev_result_destroy(r);

  REQUIRE(rsev_run_job(c.ctx, R"({"command":"verify","id":"fbar","lmax":4,"order":12})", &r) == RSEV_OK);
  CHECK(rsev_result_passed(r) == 1);
  rsev_result_destroy(r);
}

TEST_CASE("persistent cache through the C API") {
  const auto dir = std::filesystem::temp_directory_path() / "refsev_capi_cache";
  std::filesystem::remove_all(dir);
  const std::string file = (dir / "cache.txt").string();
  std::string first;
  {
    Context c(file.c_str());
    first = text_of(c.ctx, 1, 1, 3, 3, RSEV_Y_SYMBOLIC);
  }
  CHECK(std::filesystem::file_size(file) > 0);
  {
    Context c(file.c_str());
    CHECK(text_of(c.ctx, 1, 1, 3, 3, RSEV_Y_SYMBOLIC) == first);
  }
  {
    std::FILE* f = std::fopen(file.c_str(), "w");
    std::fputs("not a cache\n", f);
    std::fclose(f);
  }
  rsev_context* ctx = nullptr;
  CHECK(rsev_context_create(file.c_str(), &ctx) == RSEV_CACHE);
  CHECK(ctx == nullptr);
  std::filesystem::remove_all(dir);
}
