/* C interface to the stringy library.  Handles are opaque; every fallible call
 * returns a stringy_status and leaves a message in stringy_last_error(). */
#ifndef STRINGY_CAPI_H
#define STRINGY_CAPI_H

#include <stddef.h>
#include <stdint.h>

#if defined(STRINGY_BUILDING_LIBRARY)
#define STRINGY_API __attribute__((visibility("default")))
#else
#define STRINGY_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum stringy_status {
  STRINGY_OK = 0,
  STRINGY_ERR_ZERO_VECTOR = 1,
  STRINGY_ERR_SHAPE_MISMATCH = 2,
  STRINGY_ERR_SINGULAR_MATRIX = 3,
  STRINGY_ERR_EMPTY_INPUT = 4,
  STRINGY_ERR_NOT_FULL_DIMENSIONAL = 5,
  STRINGY_ERR_DEGENERATE_INPUT = 6,
  STRINGY_ERR_ORIGIN_NOT_INTERIOR = 7,
  STRINGY_ERR_NOT_A_FACET = 8,
  STRINGY_ERR_NOT_SIMPLICIAL = 9,
  STRINGY_ERR_UNSUPPORTED_DIMENSION = 10,
  STRINGY_ERR_NOT_CANONICAL_FANO = 11,
  STRINGY_ERR_NOT_LDP = 12,
  STRINGY_ERR_NOT_ALMOST_PSEUDOREFLEXIVE = 13,
  STRINGY_ERR_INTERNAL_INCONSISTENCY = 14,
  STRINGY_ERR_PARSE = 15,
  STRINGY_ERR_EMPTY_CHECK_SET = 16,
  STRINGY_ERR_INVALID_ARGUMENT = 17,
  STRINGY_ERR_UNKNOWN = 99
} stringy_status;

typedef enum stringy_strategy {
  STRINGY_STRATEGY_DEFAULT = 0, /* closed form where one applies */
  STRINGY_STRATEGY_VERTICES = 1,
  STRINGY_STRATEGY_BOUNDARY = 2
} stringy_strategy;

typedef enum stringy_format { STRINGY_FORMAT_JSON = 0, STRINGY_FORMAT_CSV = 1, STRINGY_FORMAT_TEXT = 2 } stringy_format;

typedef struct stringy_polytope stringy_polytope;
typedef struct stringy_records stringy_records;

typedef struct stringy_classification {
  int dim;
  int origin_interior;
  int canonical_fano;
  int reflexive;
  int almost_reflexive;
  int almost_pseudoreflexive;
  int pseudoreflexive;
  int ldp_polygon;
  size_t interior_points;
  size_t boundary_points;
} stringy_classification;

/* Message of the last failed call on this thread; "" after a success. */
STRINGY_API const char* stringy_last_error(void);
STRINGY_API const char* stringy_status_name(stringy_status status);

/* Strings returned through char** are owned by the caller. */
STRINGY_API void stringy_string_free(char* s);

/* `coords` holds n_points rows of dim integers. */
STRINGY_API stringy_status stringy_polytope_create(const int64_t* coords, size_t n_points, int dim,
                                                   stringy_polytope** out);
STRINGY_API void stringy_polytope_destroy(stringy_polytope* p);
STRINGY_API int stringy_polytope_dim(const stringy_polytope* p);
STRINGY_API size_t stringy_polytope_vertex_count(const stringy_polytope* p);

STRINGY_API stringy_status stringy_records_parse(const char* text, size_t length, stringy_records** out);
STRINGY_API void stringy_records_destroy(stringy_records* r);
STRINGY_API size_t stringy_records_count(const stringy_records* r);
/* Copy of record i; destroy it with stringy_polytope_destroy. */
STRINGY_API stringy_status stringy_records_get(const stringy_records* r, size_t i, stringy_polytope** out);

STRINGY_API stringy_status stringy_classify(const stringy_polytope* p, stringy_classification* out);

/* Canonical text form of the stringy E-function, e.g. "1*(uv)^(0/1) + ...". */
STRINGY_API stringy_status stringy_estr(const stringy_polytope* p, stringy_strategy strategy, char** text_out);
/* Stringy Euler number as "p" or "p/q". */
STRINGY_API stringy_status stringy_estr_euler(const stringy_polytope* p, stringy_strategy strategy, char** value_out);

/* JSON reports; *holds is set to 1 when the identity holds. */
STRINGY_API stringy_status stringy_check24(const stringy_polytope* p, char** json_out, int* holds);
STRINGY_API stringy_status stringy_check_lw(const stringy_polytope* p, char** json_out, int* holds);
STRINGY_API stringy_status stringy_check_cy(const stringy_polytope* p, char** json_out, int* holds);

/* Left-hand side of the Gauss-sum lemma as "p/q". */
STRINGY_API stringy_status stringy_gauss_sum(uint64_t n, char** value_out);

/* `checks` is a comma-separated list of classify, e3d, e_general, id24, lw, cy,
 * or "estr" alone.  *failures_out receives the number of failed checks. */
STRINGY_API stringy_status stringy_run_batch(const stringy_records* r, const char* checks, unsigned jobs,
                                             stringy_strategy strategy, stringy_format format, char** report_out,
                                             size_t* failures_out);

#ifdef __cplusplus
}
#endif

#endif
