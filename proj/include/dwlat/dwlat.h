/* C interface to the dominant-weight poset library.
 *
 * Every function returns a dwlat_status; on failure a message is available
 * from dwlat_last_error() (thread-local, valid until the next call on the
 * same thread). Text results are NUL-terminated strings owned by the caller
 * and released with dwlat_string_free(). */
#ifndef DWLAT_H
#define DWLAT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define DWLAT_API __declspec(dllexport)
#else
#define DWLAT_API __attribute__((visibility("default")))
#endif

typedef enum dwlat_status {
  DWLAT_OK = 0,
  DWLAT_E_UNKNOWN_TYPE = 1,
  DWLAT_E_PARSE = 2,
  DWLAT_E_INDEX = 3,
  DWLAT_E_INVALID_SUBDIAGRAM = 4,
  DWLAT_E_COMPONENT_MISMATCH = 5,
  DWLAT_E_NON_POSITIVE_LEVEL = 6,
  DWLAT_E_NOT_DOMINANT = 7,
  DWLAT_E_INCOMPARABLE = 8,
  DWLAT_E_NOT_A_COCOVER = 9,
  DWLAT_E_UNSUPPORTED_TYPE = 10,
  DWLAT_E_INTERVAL_OVERFLOW = 11,
  DWLAT_E_WINDOW_EXHAUSTED = 12,
  DWLAT_E_PREDICTION_MISMATCH = 13,
  DWLAT_E_INTERNAL = 14,
  DWLAT_E_NULL_ARGUMENT = 15
} dwlat_status;

typedef enum dwlat_format { DWLAT_FORMAT_JSON = 0, DWLAT_FORMAT_DOT = 1 } dwlat_format;

typedef struct dwlat_diagram dwlat_diagram;
typedef struct dwlat_weight dwlat_weight;

DWLAT_API const char* dwlat_last_error(void);
DWLAT_API const char* dwlat_status_name(dwlat_status status);
DWLAT_API void dwlat_string_free(char* s);

/* Type ids look like "A3-1", "D4-3". */
DWLAT_API dwlat_status dwlat_diagram_create(const char* type_id, dwlat_diagram** out);
DWLAT_API void dwlat_diagram_destroy(dwlat_diagram* d);
DWLAT_API dwlat_status dwlat_diagram_info(const dwlat_diagram* d, char** json_out);

/* JSON array of all catalog type ids with rank <= max_rank. */
DWLAT_API dwlat_status dwlat_types(int max_rank, char** json_out);

/* Weight with the given labels lambda(alpha_i^vee), i = 0..n, shifted by
 * `shift` times delta. `shift` is "p/q" or an integer; NULL means 0. */
DWLAT_API dwlat_status dwlat_weight_create(const dwlat_diagram* d, const int64_t* labels, size_t count,
                                           const char* shift, dwlat_weight** out);
DWLAT_API dwlat_status dwlat_weight_from_json(const dwlat_diagram* d, const char* json, dwlat_weight** out);
DWLAT_API void dwlat_weight_destroy(dwlat_weight* w);
DWLAT_API dwlat_status dwlat_weight_to_json(const dwlat_diagram* d, const dwlat_weight* w, char** json_out);

DWLAT_API dwlat_status dwlat_is_delta_cocover(const dwlat_diagram* d, const dwlat_weight* w, int* out);
DWLAT_API dwlat_status dwlat_meet(const dwlat_diagram* d, const dwlat_weight* a, const dwlat_weight* b,
                                  dwlat_weight** out);
DWLAT_API dwlat_status dwlat_join(const dwlat_diagram* d, const dwlat_weight* a, const dwlat_weight* b,
                                  dwlat_weight** out);

/* JSON arrays of cover edges below / above w. */
DWLAT_API dwlat_status dwlat_cocovers(const dwlat_diagram* d, const dwlat_weight* w, char** json_out);
DWLAT_API dwlat_status dwlat_covers(const dwlat_diagram* d, const dwlat_weight* w, char** json_out);

DWLAT_API dwlat_status dwlat_interval(const dwlat_diagram* d, const dwlat_weight* top, const dwlat_weight* bottom,
                                      dwlat_format format, char** out);

/* Basic cell spanned by two cocovers of top (type A_n^(1) only). When the
 * predicted cell differs from the computed interval the status is
 * DWLAT_E_PREDICTION_MISMATCH and *out still receives the computed interval,
 * so callers can inspect it. */
DWLAT_API dwlat_status dwlat_cell(const dwlat_diagram* d, const dwlat_weight* top, const dwlat_weight* mu,
                                  const dwlat_weight* mu2, dwlat_format format, char** out);

/* Oracle comparison; *passed is 1 when the report has no mismatches. */
DWLAT_API dwlat_status dwlat_verify(const dwlat_diagram* d, const int64_t* levels, size_t level_count,
                                    size_t samples, uint64_t seed, size_t pairs, char** json_out, int* passed);

#ifdef __cplusplus
}
#endif

#endif
