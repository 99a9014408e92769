#ifndef WRTCONE_H
#define WRTCONE_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Rules whose hypotheses are not all Holds report Unknown.
 */
#define WRT_FLAG_STRICT 1

/**
 * Cross-check with the sampling oracle.
 */
#define WRT_FLAG_CROSS_CHECK 2

/**
 * Add decimal approximations to the report.
 */
#define WRT_FLAG_DECIMAL 4

typedef enum {
  WRT_CONE_KIND_PROXIMAL = 0,
  WRT_CONE_KIND_FRECHET = 1,
  WRT_CONE_KIND_LIMITING = 2,
} WrtConeKind;

/**
 * Status codes; the first four match the command-line exit codes.
 */
typedef enum {
  WRT_STATUS_OK = 0,
  WRT_STATUS_FAIL = 1,
  WRT_STATUS_UNKNOWN = 2,
  WRT_STATUS_INPUT_ERROR = 3,
  WRT_STATUS_NULL_ARGUMENT = 4,
  WRT_STATUS_INVALID_UTF8 = 5,
  WRT_STATUS_PANIC = 6,
} WrtStatus;

/**
 * A union of polyhedral cones.
 */
typedef struct WrtConeUnion WrtConeUnion;

/**
 * A parsed problem file with its objects built.
 */
typedef struct WrtProblem WrtProblem;

/**
 * A finished report.
 */
typedef struct WrtReport WrtReport;

/**
 * Message of the last failed call on this thread, or null. Valid until the next call.
 */
const char *wrt_last_error(void);

/**
 * Parse a problem file and build its objects.
 *
 * # Safety
 * `json` must be a valid NUL-terminated string and `out` a valid pointer.
 */
WrtStatus wrt_problem_parse(const char *json, WrtProblem **out);

/**
 * # Safety
 * `problem` must come from `wrt_problem_parse` and not be freed twice.
 */
void wrt_problem_free(WrtProblem *problem);

/**
 * Number of queries in the file, 0 for a null handle.
 *
 * # Safety
 * `problem` must be null or a live handle.
 */
size_t wrt_problem_query_count(const WrtProblem *problem);

/**
 * Run every query; the status is the aggregate outcome.
 *
 * # Safety
 * `problem` must be a live handle and `out` a valid pointer.
 */
WrtStatus wrt_problem_run(const WrtProblem *problem, uint32_t flags, WrtReport **out);

/**
 * Run a bundled example by id.
 *
 * # Safety
 * `id` must be a valid NUL-terminated string and `out` a valid pointer.
 */
WrtStatus wrt_preset_run(const char *id, uint32_t flags, WrtReport **out);

/**
 * The report as JSON, owned by the handle.
 *
 * # Safety
 * `report` must be null or a live handle.
 */
const char *wrt_report_json(const WrtReport *report);

/**
 * Exit code the command line would return for this report, or -1 for null.
 *
 * # Safety
 * `report` must be null or a live handle.
 */
int32_t wrt_report_exit_code(const WrtReport *report);

/**
 * # Safety
 * `report` must come from a run function and not be freed twice.
 */
void wrt_report_free(WrtReport *report);

/**
 * Normal cone of the named set relative to the named convex set (whole space when
 * `wrt` is null) at a point given as `dim` rational strings.
 *
 * # Safety
 * Strings must be NUL-terminated, `coords` must hold `dim` of them, `out` must be valid.
 */
WrtStatus wrt_normal_cone(const WrtProblem *problem,
                          const char *omega,
                          const char *wrt,
                          const char *const *coords,
                          size_t dim,
                          WrtConeKind kind,
                          WrtConeUnion **out);

/**
 * Number of canonical parts; 0 means the point was outside the set.
 *
 * # Safety
 * `cones` must be null or a live handle.
 */
size_t wrt_cone_union_part_count(const WrtConeUnion *cones);

/**
 * 1 if the vector lies in the union, 0 if not, negative on error.
 *
 * # Safety
 * `cones` must be a live handle and `coords` must hold `dim` NUL-terminated strings.
 */
int32_t wrt_cone_union_contains(const WrtConeUnion *cones, const char *const *coords, size_t dim);

/**
 * The union as JSON, owned by the handle.
 *
 * # Safety
 * `cones` must be null or a live handle.
 */
const char *wrt_cone_union_json(const WrtConeUnion *cones);

/**
 * # Safety
 * `cones` must come from `wrt_normal_cone` and not be freed twice.
 */
void wrt_cone_union_free(WrtConeUnion *cones);

#endif  /* WRTCONE_H */
