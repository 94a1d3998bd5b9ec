#ifndef REFSEV_REFSEV_H
#define REFSEV_REFSEV_H

#include <stddef.h>

#if defined(_WIN32)
#define RSEV_API __declspec(dllexport)
#else
#define RSEV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rsev_status {
  RSEV_OK = 0,
  RSEV_INVALID_ARGUMENT = 1,
  RSEV_DOMAIN = 2,
  RSEV_TRUNCATION = 3,
  RSEV_CACHE = 4,
  RSEV_LIMIT = 5,
  RSEV_INTERNAL = 6
} rsev_status;

typedef enum rsev_ymode { RSEV_Y_SYMBOLIC = 0, RSEV_Y_ONE = 1, RSEV_Y_MINUS_ONE = 2 } rsev_ymode;

/* Recursion memo, optional persistent cache and the last error message. */
typedef struct rsev_context rsev_context;
/* Output of one job. */
typedef struct rsev_result rsev_result;
/* A Laurent polynomial in y^(1/2) with rational coefficients. */
typedef struct rsev_laurent rsev_laurent;

RSEV_API const char* rsev_version(void);
RSEV_API const char* rsev_status_name(rsev_status status);

/* Cache file inside $REFSEV_CACHE_DIR, or NULL when the variable is unset.
   The string stays valid until the next call. */
RSEV_API const char* rsev_default_cache_path(void);
/* cache_path may be NULL for an in-memory memo only. */
RSEV_API rsev_status rsev_context_create(const char* cache_path, rsev_context** out);
RSEV_API void rsev_context_destroy(rsev_context* ctx);
/* Message of the last failed call on ctx; "" after a successful one. */
RSEV_API const char* rsev_context_last_error(const rsev_context* ctx);

/* Runs a job given as a JobConfig JSON object (the same object echoed in every
   output header). A failed verification is RSEV_OK with passed == 0. */
RSEV_API rsev_status rsev_run_job(rsev_context* ctx, const char* job_json, rsev_result** out);
RSEV_API const char* rsev_result_body(const rsev_result* result);
RSEV_API int rsev_result_passed(const rsev_result* result);
RSEV_API void rsev_result_destroy(rsev_result* result);

/* N^{delta} for the line bundle with polygon (c, m, d) on Sigma_m. */
RSEV_API rsev_status rsev_severi_degree(rsev_context* ctx, long c, long m, long d, int delta,
                                        rsev_ymode mode, rsev_laurent** out);
/* Number of nonzero terms. */
RSEV_API size_t rsev_laurent_size(const rsev_laurent* v);
/* Term i is coefficient * y^(dexp/2); the coefficient is a decimal "p/q" or "p". */
RSEV_API int rsev_laurent_dexp(const rsev_laurent* v, size_t i);
RSEV_API const char* rsev_laurent_coeff(const rsev_laurent* v, size_t i);
/* Human-readable form, e.g. "y + 10 + y^-1". */
RSEV_API const char* rsev_laurent_text(const rsev_laurent* v);
RSEV_API void rsev_laurent_destroy(rsev_laurent* v);

#ifdef __cplusplus
}
#endif

#endif
