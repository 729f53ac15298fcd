#ifndef CAYLEY_PST_H
#define CAYLEY_PST_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  CP_STATUS_OK = 0,
  CP_STATUS_NULL_POINTER = 1,
  CP_STATUS_INVALID_ARGUMENT = 2,
  CP_STATUS_SIZE_LIMIT = 3,
  CP_STATUS_NUMERICAL = 4,
  CP_STATUS_VERIFICATION = 5,
  CP_STATUS_BUFFER_TOO_SMALL = 6,
  CP_STATUS_PANIC = 7,
} CpStatus;

/**
 * Oriented normal Cayley graph on a [`CpGroup`]; keeps the group alive.
 */
typedef struct CpGraph CpGraph;

/**
 * Group with its classes and character table.
 */
typedef struct CpGroup CpGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Owned by the
 * library; valid until the next failing call.
 */
const char *cp_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *cp_version(void);

/**
 * Builds a group from a spec such as `z:8`, `z4^2`, `m2:5` or `wreath:2:z:3`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string and `out` a valid pointer.
 */
CpStatus cp_group_from_spec(const char *spec, CpGroup **out);

/**
 * Loads a group from its JSON table document.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
CpStatus cp_group_from_json(const char *json, CpGroup **out);

/**
 * # Safety
 * `g` must come from `cp_group_from_*` and not be used afterwards; null is ignored.
 */
void cp_group_free(CpGroup *g);

/**
 * # Safety
 * `g` must be a live group handle or null (returns 0).
 */
size_t cp_group_order(const CpGroup *g);

/**
 * # Safety
 * `g` must be a live group handle or null (returns 0).
 */
size_t cp_group_num_classes(const CpGroup *g);

/**
 * Element index of a label such as `x^4` or `(1,0)`.
 *
 * # Safety
 * `g` must be a live group handle, `label` NUL-terminated, `out` valid.
 */
CpStatus cp_group_find_label(const CpGroup *g, const char *label, size_t *out);

/**
 * Conjugacy class index of an element.
 *
 * # Safety
 * `g` must be a live group handle and `out` valid.
 */
CpStatus cp_group_class_of(const CpGroup *g, size_t element, size_t *out);

/**
 * Cayley graph on the union of the given classes; orientation and
 * normality are validated.
 *
 * # Safety
 * `g` must be a live group handle, `classes` must point to `len` indices,
 * and `out` must be valid.
 */
CpStatus cp_graph_new(const CpGroup *g, const size_t *classes, size_t len, CpGraph **out);

/**
 * # Safety
 * `h` must come from `cp_graph_new` and not be used afterwards; null is ignored.
 */
void cp_graph_free(CpGraph *h);

/**
 * Character criterion for PST `e -> z` at `tau`.
 *
 * # Safety
 * `h` must be a live graph handle; `residual` and `accepted` valid pointers.
 */
CpStatus cp_pst_check(const CpGraph *h, size_t z, double tau, double *residual, bool *accepted);

/**
 * Smallest PST time `e -> z`; `found` is false when none exists.
 *
 * # Safety
 * `h` must be a live graph handle; `tau` and `found` valid pointers.
 */
CpStatus cp_pst_solve(const CpGraph *h, size_t z, double *tau, bool *found);

/**
 * `S_e`: writes its size and minimal time, and up to `cap` elements into
 * `elements`. Returns `BufferTooSmall` (with `size` set) if `cap < size`.
 *
 * # Safety
 * `h` must be a live graph handle; `size`, `tau` valid; `elements` must hold
 * `cap` entries (may be null when `cap == 0`).
 */
CpStatus cp_mst(const CpGraph *h, size_t *size, double *tau, size_t *elements, size_t cap);

/**
 * `|U(t)[b][a]|` from the walk matrix.
 *
 * # Safety
 * `h` must be a live graph handle and `out` valid.
 */
CpStatus cp_fidelity(const CpGraph *h, size_t a, size_t b, double t, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CAYLEY_PST_H */
