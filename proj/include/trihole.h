/* C interface to the trihole solver. All handles are opaque; every call
 * returns a th_status and leaves a message for th_last_error() on failure.
 * Strings returned through char** are owned by the caller and released with
 * th_string_free(). */
#ifndef TRIHOLE_H
#define TRIHOLE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define TH_API __declspec(dllexport)
#else
#define TH_API __attribute__((visibility("default")))
#endif

typedef enum th_status {
  TH_OK = 0,
  TH_INFEASIBLE = 1,
  TH_INVALID_INPUT = 2,
  TH_RESOURCE_CAP = 3,
  TH_INTERNAL = 4
} th_status;

typedef struct th_instance th_instance;
typedef struct th_result th_result;

typedef struct th_check_options {
  int skip_metric; /* nonzero: cut terms only */
  int max_quad;    /* cap on hole boundary length for the metric term, 0: none */
  int threads;     /* worker threads for distance and metric computations */
} th_check_options;

typedef struct th_oracle_limits {
  int cut_bound;    /* max vertices for subset enumeration */
  int metric_bound; /* max vertices for K_{2,3} map enumeration */
} th_oracle_limits;

typedef struct th_gen_params {
  uint64_t seed;
  int n;
  int outer_size;
  int hole_max;
  int demands;
  int64_t cmax;
  int64_t dmax;
  int chords; /* -1: n / 2 */
  const char* target; /* "any", "solvable", "cut-tight", "metric-violating" */
  int retries;
} th_gen_params;

/* Message of the last failed call on this thread, "" if none. */
TH_API const char* th_last_error(void);
TH_API const char* th_version(void);
TH_API void th_string_free(char* s);

TH_API void th_check_options_default(th_check_options* opt);
TH_API void th_oracle_limits_default(th_oracle_limits* lim);
TH_API void th_gen_params_default(th_gen_params* p);

TH_API th_status th_instance_parse(const char* text, th_instance** out);
TH_API th_status th_instance_read(const char* path, th_instance** out);
TH_API th_status th_generate(const th_gen_params* p, th_instance** out);
TH_API void th_instance_free(th_instance* inst);
TH_API th_status th_instance_format(const th_instance* inst, char** text);
TH_API int th_instance_vertex_count(const th_instance* inst);
TH_API int th_instance_edge_count(const th_instance* inst);

/* TH_OK when valid, TH_INVALID_INPUT otherwise; the report lists problems
 * and odd-parity vertices either way. */
TH_API th_status th_validate(const th_instance* inst, char** report);

/* Excess report: TH_OK when no term is negative, TH_INFEASIBLE otherwise. */
TH_API th_status th_check(const th_instance* inst, const th_check_options* opt, char** report);

/* TH_OK when solved, TH_INFEASIBLE with a certificate otherwise. */
TH_API th_status th_solve(const th_instance* inst, const th_check_options* opt,
                          th_result** out);
TH_API void th_result_free(th_result* r);
TH_API int th_result_solved(const th_result* r);
TH_API int64_t th_result_iterations(const th_result* r);
TH_API th_status th_result_solution(const th_result* r, char** text);
TH_API th_status th_result_trace(const th_result* r, char** text);

/* Re-checks a solution file against the instance: TH_OK when it is an
 * admissible multiflow, TH_INFEASIBLE when it violates capacities or
 * demands, TH_INVALID_INPUT when malformed. */
TH_API th_status th_verify(const th_instance* inst, const char* solution, char** report);

/* Exhaustive ground truth: TH_OK solvable, TH_INFEASIBLE not solvable,
 * TH_RESOURCE_CAP above the size bounds. */
TH_API th_status th_oracle(const th_instance* inst, const th_oracle_limits* lim, char** report);

#ifdef __cplusplus
}
#endif

#endif /* TRIHOLE_H */
