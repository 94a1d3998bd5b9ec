#include "refsev/refsev.h"

#include <memory>
#include <new>
#include <string>
#include <vector>

#include "caporaso/ch_recursion.hpp"
#include "cli/job.hpp"
#include "io/cache_store.hpp"
#include "ring/error.hpp"

struct rsev_context {
  std::unique_ptr<refsev::CacheStore> store;
  std::unique_ptr<refsev::CHTable> table;
  std::string last_error;
};

struct rsev_result {
  std::string body;
  bool passed = true;
};

struct rsev_laurent {
  std::vector<int> dexp;
  std::vector<std::string> coeff;
  std::string text;
};

namespace {

rsev_status status_of(refsev::ErrorCode code) { return static_cast<rsev_status>(code); }

// Runs fn, converting exceptions into a status and a message in *error.
template <typename Fn>
rsev_status guarded(std::string* error, Fn&& fn) {
  try {
    fn();
    if (error) error->clear();
    return RSEV_OK;
  } catch (const refsev::Error& e) {
    if (error) *error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    if (error) *error = std::string("malformed job JSON: ") + e.what();
    return RSEV_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    if (error) *error = "out of memory";
    return RSEV_LIMIT;
  } catch (const std::exception& e) {
    if (error) *error = e.what();
    return RSEV_INTERNAL;
  } catch (...) {
    if (error) *error = "unknown error";
    return RSEV_INTERNAL;
  }
}

refsev::YMode ymode_of(rsev_ymode mode) {
  switch (mode) {
    case RSEV_Y_SYMBOLIC:
      return refsev::YMode::kSymbolic;
    case RSEV_Y_ONE:
      return refsev::YMode::kOne;
    case RSEV_Y_MINUS_ONE:
      return refsev::YMode::kMinusOne;
  }
  refsev::fail(refsev::ErrorCode::kInvalidArgument, "unknown y mode");
}

}  // namespace

extern "C" {

const char* rsev_version(void) { return "1.0.0"; }

const char* rsev_status_name(rsev_status status) {
  switch (status) {
    case RSEV_OK:
      return "ok";
    case RSEV_INVALID_ARGUMENT:
      return "invalid argument";
    case RSEV_DOMAIN:
      return "domain error";
    case RSEV_TRUNCATION:
      return "truncation error";
    case RSEV_CACHE:
      return "cache error";
    case RSEV_LIMIT:
      return "limit exceeded";
    case RSEV_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* rsev_default_cache_path(void) {
  static thread_local std::string path;
  const auto p = refsev::CacheStore::default_path();
  if (!p) return nullptr;
  path = p->string();
  return path.c_str();
}

rsev_status rsev_context_create(const char* cache_path, rsev_context** out) {
  if (out == nullptr) return RSEV_INVALID_ARGUMENT;
  *out = nullptr;
  auto ctx = std::make_unique<rsev_context>();
  const rsev_status st = guarded(nullptr, [&] {
    if (cache_path != nullptr && *cache_path != '\0') {
      ctx->store = std::make_unique<refsev::CacheStore>(cache_path);
    }
    ctx->table = std::make_unique<refsev::CHTable>(ctx->store.get());
  });
  if (st == RSEV_OK) *out = ctx.release();
  return st;
}

void rsev_context_destroy(rsev_context* ctx) { delete ctx; }

const char* rsev_context_last_error(const rsev_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

rsev_status rsev_run_job(rsev_context* ctx, const char* job_json, rsev_result** out) {
  if (ctx == nullptr || out == nullptr) return RSEV_INVALID_ARGUMENT;
  *out = nullptr;
  if (job_json == nullptr) {
    ctx->last_error = "null job";
    return RSEV_INVALID_ARGUMENT;
  }
  auto result = std::make_unique<rsev_result>();
  const rsev_status st = guarded(&ctx->last_error, [&] {
    const refsev::JobConfig job = refsev::job_from_json(nlohmann::json::parse(job_json));
    const refsev::JobOutput o = refsev::run_job(job, *ctx->table);
    result->body = o.body;
    result->passed = o.passed;
  });
  if (st == RSEV_OK) *out = result.release();
  return st;
}

const char* rsev_result_body(const rsev_result* result) { return result ? result->body.c_str() : ""; }

int rsev_result_passed(const rsev_result* result) { return result && result->passed ? 1 : 0; }

void rsev_result_destroy(rsev_result* result) { delete result; }

rsev_status rsev_severi_degree(rsev_context* ctx, long c, long m, long d, int delta,
                               rsev_ymode mode, rsev_laurent** out) {
  if (ctx == nullptr || out == nullptr) return RSEV_INVALID_ARGUMENT;
  *out = nullptr;
  auto v = std::make_unique<rsev_laurent>();
  const rsev_status st = guarded(&ctx->last_error, [&] {
    if (c < 0 || m < 0 || d < 0 || delta < 0) {
      refsev::fail(refsev::ErrorCode::kInvalidArgument, "c, m, d and delta must be >= 0");
    }
    const refsev::YLaurent value =
        ctx->table->severi_degree(refsev::Polygon{c, m, d}, delta, ymode_of(mode));
    for (const auto& t : value.terms()) {
      v->dexp.push_back(t.dexp);
      v->coeff.push_back(refsev::to_string(t.coeff));
    }
    v->text = value.to_string();
  });
  if (st == RSEV_OK) *out = v.release();
  return st;
}

size_t rsev_laurent_size(const rsev_laurent* v) { return v ? v->dexp.size() : 0; }

int rsev_laurent_dexp(const rsev_laurent* v, size_t i) {
  return v && i < v->dexp.size() ? v->dexp[i] : 0;
}

const char* rsev_laurent_coeff(const rsev_laurent* v, size_t i) {
  return v && i < v->coeff.size() ? v->coeff[i].c_str() : "";
}

const char* rsev_laurent_text(const rsev_laurent* v) { return v ? v->text.c_str() : ""; }

void rsev_laurent_destroy(rsev_laurent* v) { delete v; }

}  // extern "C"
