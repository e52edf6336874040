/*
 * hadcode C API.
 *
 * Hadamard matrix constructions, punctured Hadamard codes, Grey-Rankin bound
 * arithmetic and maximality audits behind opaque handles. Every fallible call
 * returns an hc_status; on failure hc_last_error() describes the problem for the
 * calling thread. Handles returned through out-parameters are owned by the caller
 * and released with the matching *_free function. Output parameters are left
 * untouched on failure.
 */
#ifndef HADCODE_H
#define HADCODE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HADCODE_BUILDING_LIBRARY)
#    define HC_API __declspec(dllexport)
#  else
#    define HC_API __declspec(dllimport)
#  endif
#else
#  define HC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hc_status {
  HC_OK = 0,
  HC_ERR_INVALID_ARGUMENT = 1,
  HC_ERR_NOT_PRIME,
  HC_ERR_EVEN_CHARACTERISTIC,
  HC_ERR_SIZE_CAP_EXCEEDED,
  HC_ERR_MIXED_FIELDS,
  HC_ERR_NOT_PRIME_POWER,
  HC_ERR_BAD_RESIDUE_CLASS,
  HC_ERR_NOT_TWIN_PRIME_POWERS,
  HC_ERR_CONSTRUCTION_FAILED,
  HC_ERR_NOT_HADAMARD_INPUT,
  HC_ERR_NOT_SQUARE,
  HC_ERR_ORDER_IMPOSSIBLE,
  HC_ERR_ORDER_UNREACHABLE,
  HC_ERR_DEGENERATE_ROWS,
  HC_ERR_LENGTH_MISMATCH,
  HC_ERR_TOO_FEW_WORDS,
  HC_ERR_BAD_SHAPE,
  HC_ERR_BAD_COLUMN_LIST,
  HC_ERR_BAD_PARAMS,
  HC_ERR_SHAPE_MISMATCH,
  HC_ERR_TOO_LONG,
  HC_ERR_PARSE,
  HC_ERR_IO,
  HC_ERR_OVERFLOW,
  HC_ERR_BUFFER_TOO_SMALL = 64,
  HC_ERR_INTERNAL = 99
} hc_status;

typedef struct hc_plan hc_plan;
typedef struct hc_matrix hc_matrix;
typedef struct hc_code hc_code;

HC_API const char* hc_version(void);
HC_API const char* hc_status_name(hc_status status);
/* Message of the most recent failure on this thread; "" if none. */
HC_API const char* hc_last_error(void);

/*
 * String outputs: *needed receives strlen + 1. The text is copied only when
 * buf != NULL and cap >= *needed; otherwise HC_ERR_BUFFER_TOO_SMALL (or HC_OK
 * when buf == NULL, a pure size query).
 */

/* ---- construction plans ------------------------------------------------ */

typedef enum hc_method {
  HC_METHOD_AUTO = 0,
  HC_METHOD_SYLVESTER,
  HC_METHOD_PALEY1,
  HC_METHOD_PALEY2,
  HC_METHOD_TWINPRIME
} hc_method;

/* AUTO runs the planner; any other method must produce `order` by itself. */
HC_API hc_status hc_plan_create(uint64_t order, hc_method method, hc_plan** out);
HC_API void hc_plan_free(hc_plan* plan);
HC_API uint64_t hc_plan_order(const hc_plan* plan);
HC_API size_t hc_plan_kronecker_nodes(const hc_plan* plan);
HC_API hc_status hc_plan_describe(const hc_plan* plan, char* buf, size_t cap, size_t* needed);
HC_API hc_status hc_plan_execute(const hc_plan* plan, hc_matrix** out);

/* ---- matrices ---------------------------------------------------------- */

HC_API hc_status hc_matrix_sylvester(unsigned a, hc_matrix** out);
HC_API hc_status hc_matrix_paley_one(uint64_t q, hc_matrix** out);
HC_API hc_status hc_matrix_paley_two(uint64_t q, hc_matrix** out);
HC_API hc_status hc_matrix_twin_prime(uint64_t q, hc_matrix** out);
HC_API hc_status hc_matrix_kronecker(const hc_matrix* a, const hc_matrix* b, hc_matrix** out);
HC_API void hc_matrix_free(hc_matrix* m);

HC_API size_t hc_matrix_rows(const hc_matrix* m);
HC_API size_t hc_matrix_cols(const hc_matrix* m);
/* +1 or -1; 0 for a null handle or out-of-range index. */
HC_API int hc_matrix_entry(const hc_matrix* m, size_t row, size_t col);
HC_API hc_status hc_matrix_is_hadamard(const hc_matrix* m, int* is_hadamard);
HC_API hc_status hc_matrix_normalize(const hc_matrix* m, hc_matrix** out);

HC_API hc_status hc_matrix_parse(const char* text, size_t len, hc_matrix** out);
HC_API hc_status hc_matrix_to_text(const hc_matrix* m, char* buf, size_t cap, size_t* needed);
HC_API hc_status hc_matrix_read_file(const char* path, hc_matrix** out);
HC_API hc_status hc_matrix_write_file(const hc_matrix* m, const char* path);

/* ---- codes ------------------------------------------------------------- */

typedef enum hc_column_policy {
  HC_COLUMNS_LAST = 0,
  HC_COLUMNS_FIRST,
  HC_COLUMNS_EXPLICIT
} hc_column_policy;

typedef struct hc_code_params {
  size_t length;
  size_t size;
  size_t min_distance;
} hc_code_params;

typedef struct hc_puncture_info {
  size_t t;
  size_t i;
  size_t guaranteed_distance; /* 2t - 2i */
} hc_puncture_info;

/* Rows and their complements: 2n words of length m. */
HC_API hc_status hc_code_from_matrix(const hc_matrix* m, hc_code** out);

/*
 * Deletes `puncture` = 4i columns from a Hadamard matrix of order 4t + 4i and
 * returns the code of the result. `columns` is read only for HC_COLUMNS_EXPLICIT.
 * `info` may be NULL.
 */
HC_API hc_status hc_code_from_punctured(const hc_matrix* h, size_t puncture, hc_column_policy policy,
                                        const size_t* columns, size_t ncolumns, hc_code** out,
                                        hc_puncture_info* info);

/*
 * Plans a Hadamard matrix of order 4t + 4i, normalizes it, deletes 4i columns and
 * returns the code. `hadamard` (nullable) receives the normalized matrix and
 * `deleted` (nullable, capacity >= 4i) the deleted column indices.
 */
HC_API hc_status hc_code_punctured_hadamard(size_t t, size_t i, hc_column_policy policy, const size_t* columns,
                                            size_t ncolumns, hc_code** out, hc_matrix** hadamard,
                                            size_t* deleted);
HC_API void hc_code_free(hc_code* c);

HC_API size_t hc_code_size(const hc_code* c);
HC_API size_t hc_code_length(const hc_code* c);
/* 0 or 1; -1 for a null handle or out-of-range index. */
HC_API int hc_code_bit(const hc_code* c, size_t word, size_t bit);

HC_API hc_status hc_code_parse(const char* text, size_t len, hc_code** out);
HC_API hc_status hc_code_to_text(const hc_code* c, char* buf, size_t cap, size_t* needed);
HC_API hc_status hc_code_read_file(const char* path, hc_code** out);
HC_API hc_status hc_code_write_file(const hc_code* c, const char* path);

HC_API hc_status hc_code_distance(const hc_code* c, size_t a, size_t b, size_t* out);
HC_API hc_status hc_code_params_compute(const hc_code* c, hc_code_params* out);
/* Gram-matrix route; alpha (nullable) receives the largest off-diagonal |<r_i, r_j>|. */
HC_API hc_status hc_code_gram_params(const hc_matrix* m, hc_code_params* out, int64_t* alpha);
/* counts[d] for d = 0 .. length; cap must be >= length + 1. */
HC_API hc_status hc_code_distance_distribution(const hc_code* c, uint64_t* counts, size_t cap);
HC_API hc_status hc_code_is_self_complementary(const hc_code* c, int* out);

/* ---- bounds ------------------------------------------------------------ */

typedef struct hc_rational {
  int64_t num;
  int64_t den;
} hc_rational;

typedef struct hc_bound_report {
  int64_t n;
  int64_t d;
  int applicable;
  hc_rational bound;    /* valid when applicable */
  int64_t floor;        /* valid when applicable */
  int has_code_size;
  uint64_t code_size;
  int has_gap;
  int64_t gap;          /* floor - code_size */
} hc_bound_report;

HC_API hc_status hc_grey_rankin(int64_t n, int64_t d, hc_bound_report* out);
HC_API hc_status hc_grey_rankin_punctured(int64_t t, int64_t i, hc_bound_report* out);
HC_API hc_status hc_bound_attach_code_size(hc_bound_report* report, uint64_t code_size);
/* Writes at most cap values; *count receives the full number found. */
HC_API hc_status hc_integrality_scan_i1(int64_t first, int64_t last, int64_t* out, size_t cap, size_t* count);
HC_API hc_status hc_maximality_threshold(int64_t i, int64_t* out);

typedef struct hc_symplectic {
  int64_t l;
  int64_t n;
  int64_t d;
  int64_t symplectic_size;
  int64_t theorem_size;
  hc_rational ratio;
  int64_t t;
  int64_t i;
} hc_symplectic;

HC_API hc_status hc_symplectic_comparison(int64_t l, hc_symplectic* out);

/* ---- audits ------------------------------------------------------------ */

typedef struct hc_probe_report {
  uint64_t samples;
  uint64_t seed;
  size_t t;
  size_t i;
  size_t guaranteed_distance;
  int in_guaranteed_range;
  int vacuous;
  int all_rejected;
  size_t min_observed_best_distance;
  size_t max_observed_best_distance;
  int parseval_checked;
  int64_t min_max_abs_inner;
  int sqrt_bound_held;
  int64_t parity_refined_bound;
  int parity_bound_held;
  int has_counterexample;
} hc_probe_report;

/* +-1 vector given as bits (1 = +1), one byte per entry. */
HC_API hc_status hc_parseval_check(const hc_matrix* h, const uint8_t* bits, size_t len, int* holds);

/*
 * t and i are inferred from the shapes (code length 4t, matrix order 4t + 4i).
 * `counterexample` (nullable) receives a one-word code when has_counterexample.
 */
HC_API hc_status hc_maximality_probe(const hc_code* c, const hc_matrix* h, const size_t* deleted, size_t ndeleted,
                                     uint64_t samples, uint64_t seed, hc_probe_report* out,
                                     hc_code** counterexample);
HC_API hc_status hc_exhaustive_maximality(const hc_code* c, int* maximal);

typedef struct hc_extension_report {
  uint64_t budget;
  uint64_t spent;
  uint64_t seed;
  uint64_t restarts;
  size_t target_distance;
  size_t added_count;
  size_t min_certificate_distance; /* 0 when nothing was added */
} hc_extension_report;

/* `added` (nullable) receives the certified new words as a code (possibly empty). */
HC_API hc_status hc_extend_search(const hc_code* c, uint64_t budget, uint64_t seed, hc_extension_report* out,
                                  hc_code** added);

#ifdef __cplusplus
}
#endif

#endif /* HADCODE_H */
