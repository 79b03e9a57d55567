/* C interface to the xcover exact cover toolkit. */

#ifndef XCOVER_H
#define XCOVER_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result code of a fallible call. Anything but `Ok` leaves a message in
 [`xc_last_error`].
 */
typedef enum XcStatus {
  XC_STATUS_OK = 0,
  /*
   A required pointer argument was null.
   */
  XC_STATUS_NULL_ARGUMENT = 1,
  /*
   Input text was not valid UTF-8.
   */
  XC_STATUS_UTF8 = 2,
  /*
   The instance rejected the operation (duplicate column, empty row, ...).
   */
  XC_STATUS_MODEL = 3,
  /*
   Instance text did not parse.
   */
  XC_STATUS_PARSE = 4,
  /*
   A row id was out of range.
   */
  XC_STATUS_UNKNOWN_ROW = 5,
  /*
   The library panicked; state may be inconsistent.
   */
  XC_STATUS_INTERNAL = 6,
} XcStatus;

/*
 Search engine selector.
 */
typedef enum XcEngine {
  XC_ENGINE_NAIVE = 0,
  XC_ENGINE_DLX = 1,
} XcEngine;

/*
 Why a search stopped.
 */
typedef enum XcHalt {
  XC_HALT_EXHAUSTED = 0,
  XC_HALT_SOLUTION_LIMIT = 1,
  XC_HALT_UPDATE_LIMIT = 2,
  XC_HALT_TIME_LIMIT = 3,
} XcHalt;

/*
 Opaque exact cover instance.
 */
typedef struct XcInstance XcInstance;

/*
 Search bounds; zero means unbounded.
 */
typedef struct XcLimits {
  uint64_t max_solutions;
  uint64_t max_updates;
  double time_budget_seconds;
} XcLimits;

/*
 Receives one solution: `rows` points at `len` selected row ids in
 selection order. The pointer is only valid during the call.
 */
typedef void (*XcSolutionCallback)(const uint32_t *rows, size_t len, void *user);

/*
 Deterministic search counters (wall time excepted).
 */
typedef struct XcStats {
  uint64_t solutions;
  uint64_t total_updates;
  uint64_t max_depth;
  double wall_seconds;
  enum XcHalt halted_by;
} XcStats;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message of the last failing call on this thread; empty string if none.
 Valid until the next failing call on the same thread.
 */
const char *xc_last_error(void);

/*
 Creates an empty instance. Free with [`xc_instance_free`].
 */
struct XcInstance *xc_instance_new(void);

/*
 Frees an instance; a null pointer is ignored.

 # Safety
 `instance` must have come from this library and not be freed twice.
 */
void xc_instance_free(struct XcInstance *instance);

/*
 Parses instance text (UTF-8, not NUL-terminated) into a new instance.

 # Safety
 `text` must point at `len` readable bytes; `out` must be writable.
 */
enum XcStatus xc_instance_parse(const char *text, size_t len, struct XcInstance **out);

/*
 Registers at-most-once columns; see the Rust API for ordering rules.

 # Safety
 `labels` must point at `count` NUL-terminated strings.
 */
enum XcStatus xc_instance_declare_secondary(struct XcInstance *instance,
                                            const char *const *labels,
                                            size_t count);

/*
 Appends a row; writes its 1-based id to `row_id` when non-null.

 # Safety
 `labels` must point at `count` NUL-terminated strings.
 */
enum XcStatus xc_instance_add_row(struct XcInstance *instance,
                                  const char *const *labels,
                                  size_t count,
                                  uint32_t *row_id);

/*
 Number of rows; 0 for a null instance.

 # Safety
 `instance` must be a live handle or null.
 */
size_t xc_instance_row_count(const struct XcInstance *instance);

/*
 Number of columns; 0 for a null instance.

 # Safety
 `instance` must be a live handle or null.
 */
size_t xc_instance_column_count(const struct XcInstance *instance);

/*
 Number of (row, column) incidences; 0 for a null instance.

 # Safety
 `instance` must be a live handle or null.
 */
uint64_t xc_instance_node_count(const struct XcInstance *instance);

/*
 Serializes the instance to the text format. Free the returned string
 with [`xc_string_free`]; null on a null instance.

 # Safety
 `instance` must be a live handle or null.
 */
char *xc_instance_to_text(const struct XcInstance *instance);

/*
 Frees a string returned by this library; a null pointer is ignored.

 # Safety
 `text` must have come from this library and not be freed twice.
 */
void xc_string_free(char *text);

/*
 Runs Algorithm X; `callback` (when non-null) receives each solution,
 `stats` (when non-null) receives the counters. `limits` may be null
 for an unbounded search.

 # Safety
 All pointers must be valid for the duration of the call; the callback
 must not call back into this instance.
 */
enum XcStatus xc_solve(const struct XcInstance *instance,
                       enum XcEngine engine,
                       const struct XcLimits *limits,
                       XcSolutionCallback callback,
                       void *user,
                       struct XcStats *stats);

/*
 Counts all solutions with the given engine.

 # Safety
 `instance` must be a live handle or null; `out` must be writable.
 */
enum XcStatus xc_count(const struct XcInstance *instance, enum XcEngine engine, uint64_t *out);

/*
 Writes 1 to `out` iff `rows` (1-based ids) is an exact cover.

 # Safety
 `rows` must point at `len` ids; `out` must be writable.
 */
enum XcStatus xc_check_solution(const struct XcInstance *instance,
                                const uint32_t *rows,
                                size_t len,
                                int32_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* XCOVER_H */
