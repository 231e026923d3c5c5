/* adlin — bound-consistency solver for finite-domain linear constraints
 * mixed with alldifferent constraints.
 *
 * All functions returning int yield an ADLIN_OK / ADLIN_E* code; on any
 * error a thread-local message is available via adlin_last_error(). Handles
 * are opaque and single-owner: free them with the matching *_free call.
 * Values must satisfy |v| <= 2^31 so that intermediate sums stay inside
 * 64-bit arithmetic.
 */
#ifndef ADLIN_H
#define ADLIN_H

#include <stddef.h>
#include <stdint.h>

#if defined(__GNUC__) || defined(__clang__)
#define ADLIN_API __attribute__((visibility("default")))
#else
#define ADLIN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define ADLIN_VERSION_STRING "1.0.0"

/* API call outcomes. */
enum {
  ADLIN_OK = 0,       /* success */
  ADLIN_EINVAL = 1,   /* null handle, bad enum value, unknown family, ... */
  ADLIN_EPARSE = 2,   /* malformed input text */
  ADLIN_EIO = 3,      /* file could not be read */
  ADLIN_EBUDGET = 4,  /* instance exceeds the exhaustive-check budget */
  ADLIN_EINTERNAL = 5 /* unexpected failure; see adlin_last_error() */
};

/* Solve outcomes, reported by adlin_result_status(). */
enum {
  ADLIN_SAT = 0,   /* a solution was found */
  ADLIN_UNSAT = 1, /* search space exhausted without a solution */
  ADLIN_LIMIT = 2  /* node or time budget hit first */
};

/* Filter strength for linear constraints. */
enum {
  ADLIN_FILTER_STANDARD = 0, /* interval bounds only */
  ADLIN_FILTER_IMPROVED = 1  /* distinctness-aware bounds (default) */
};

/* Branching variable order. */
enum {
  ADLIN_ORDER_LEX = 0,       /* first unfixed variable (default) */
  ADLIN_ORDER_MIN_DOMAIN = 1 /* smallest domain, ties by index */
};

typedef struct adlin_problem adlin_problem;
typedef struct adlin_result adlin_result;

typedef struct adlin_options {
  int filter;             /* ADLIN_FILTER_* */
  int var_order;          /* ADLIN_ORDER_* */
  uint64_t node_limit;    /* max decisions; 0 = unlimited */
  uint64_t time_limit_ms; /* wall-clock budget; 0 = unlimited */
} adlin_options;

typedef struct adlin_stats {
  uint64_t decisions;
  uint64_t conflicts;
  uint64_t bounds_computed;
  uint64_t bounds_improved;
  int64_t improvement_total;
} adlin_stats;

typedef struct adlin_gen_options {
  uint64_t size;   /* kakuro: side length; wqg/magic: order; crypto: unused */
  uint64_t seed;   /* same seed, same instance, on every platform */
  double fill;     /* wqg only: target ratio of pre-filled cells, 0..1 */
  uint64_t givens; /* magic only: number of revealed cells */
  int weighted;    /* kakuro only: nonzero draws per-cell weights 1..9 */
} adlin_gen_options;

ADLIN_API const char* adlin_version(void);

/* Message for the most recent failing call on this thread ("" when none). */
ADLIN_API const char* adlin_last_error(void);

/* --- Problems ---------------------------------------------------------- */

/* Text in the instance grammar (see docs/formats.md). */
ADLIN_API int adlin_parse_string(const char* text, adlin_problem** out);

/* Kakuro board text ("kakuro <rows> <cols> [weighted]" header). */
ADLIN_API int adlin_parse_kakuro(const char* text, adlin_problem** out);

/* Crypto word list ("crypto" header, one word and target per line). */
ADLIN_API int adlin_parse_crypto(const char* text, adlin_problem** out);

/* Reads the file and dispatches on its extension: .kakuro and .crypto are
 * treated as the native puzzle formats, anything else as instance text. */
ADLIN_API int adlin_parse_file(const char* path, adlin_problem** out);

ADLIN_API void adlin_problem_free(adlin_problem* p);

ADLIN_API size_t adlin_var_count(const adlin_problem* p);

/* Name of variable i, or NULL when out of range. The pointer stays valid
 * for the lifetime of the problem. */
ADLIN_API const char* adlin_var_name(const adlin_problem* p, size_t i);

/* Metadata value ("family", "seed", ...), or NULL when absent. */
ADLIN_API const char* adlin_meta(const adlin_problem* p, const char* key);

/* Instance-grammar text; free with adlin_string_free. */
ADLIN_API int adlin_serialize(const adlin_problem* p, char** out);

ADLIN_API void adlin_string_free(char* s);

/* --- Solving ----------------------------------------------------------- */

/* Fills in the defaults: improved filter, lex order, no limits. */
ADLIN_API void adlin_options_init(adlin_options* o);

/* opts may be NULL for the defaults. */
ADLIN_API int adlin_solve(const adlin_problem* p, const adlin_options* opts,
                          adlin_result** out);

ADLIN_API int adlin_result_status(const adlin_result* r);

/* Number of assigned values (the problem's variable count when sat, else 0). */
ADLIN_API size_t adlin_result_value_count(const adlin_result* r);

ADLIN_API int adlin_result_value(const adlin_result* r, size_t i, int64_t* out);

ADLIN_API void adlin_result_stats(const adlin_result* r, adlin_stats* out);

ADLIN_API void adlin_result_free(adlin_result* r);

/* --- Generation -------------------------------------------------------- */

/* Sets size 8, seed 1, fill 0.5, givens 0, weighted 0. */
ADLIN_API void adlin_gen_options_init(adlin_gen_options* o);

/* family is one of "kakuro", "gen-kakuro" (weighted cells), "crypto",
 * "wqg", "magic" (odd order). Every generated instance is satisfiable by
 * construction. opts may be NULL for the defaults. */
ADLIN_API int adlin_generate(const char* family, const adlin_gen_options* opts,
                             adlin_problem** out);

/* --- Reference checking ------------------------------------------------ */

/* Cross-checks the search against exhaustive enumeration; only feasible for
 * small instances (ADLIN_EBUDGET otherwise). *out_agree is 1 when the
 * verdicts match and any reported solution is genuine, else 0. */
ADLIN_API int adlin_verify(const adlin_problem* p, const adlin_options* opts,
                           int* out_agree);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ADLIN_H */
