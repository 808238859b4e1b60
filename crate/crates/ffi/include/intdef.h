#ifndef INTDEF_H
#define INTDEF_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum IntdefRingKind {
  /**
   * ℤ[x]
   */
  INTDEF_RING_KIND_INT_POLY = 0,
  /**
   * ℚ[x]
   */
  INTDEF_RING_KIND_RAT_POLY = 1,
  /**
   * ℚ(i)[x]
   */
  INTDEF_RING_KIND_GAUSS_POLY = 2,
  /**
   * Quantum plane over ℚ(i); needs `q`.
   */
  INTDEF_RING_KIND_Q_PLANE = 3,
} IntdefRingKind;

typedef enum IntdefSide {
  INTDEF_SIDE_LEFT = 0,
  INTDEF_SIDE_RIGHT = 1,
} IntdefSide;

/**
 * Status codes returned by every fallible function.
 */
typedef enum IntdefStatus {
  INTDEF_STATUS_OK = 0,
  INTDEF_STATUS_NULL_POINTER = 1,
  INTDEF_STATUS_INVALID_UTF8 = 2,
  INTDEF_STATUS_PARSE = 3,
  INTDEF_STATUS_CONTEXT_MISMATCH = 4,
  INTDEF_STATUS_DIVISION_BY_ZERO = 5,
  INTDEF_STATUS_INVALID_ARGUMENT = 6,
  INTDEF_STATUS_EVAL = 7,
  INTDEF_STATUS_PANIC = 8,
} IntdefStatus;

/**
 * Opaque element handle.
 */
typedef struct IntdefElement IntdefElement;

/**
 * Opaque ring handle.
 */
typedef struct IntdefRing IntdefRing;

/**
 * Membership decision with its witness.
 */
typedef struct IntdefDecision {
  bool member;
  /**
   * Integer equal to the element when `member` is true.
   */
  int64_t witness;
  /**
   * The element is an integer constant beyond the search bound.
   */
  bool bound_too_small;
} IntdefDecision;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failed call on this thread, or "" after a
 * success. The pointer stays valid until the next call on the same thread.
 */
const char *intdef_last_error_message(void);

/**
 * Creates a ring. `q` is read only for [`IntdefRingKind::QPlane`] and may be
 * null otherwise.
 *
 * # Safety
 * `q` must be null or a valid C string; `out` must be valid for writes.
 */
enum IntdefStatus intdef_ring_new(enum IntdefRingKind kind, const char *q, struct IntdefRing **out);

/**
 * # Safety
 * `ring` must be null or a handle from [`intdef_ring_new`] not yet freed.
 */
void intdef_ring_free(struct IntdefRing *ring);

/**
 * Writes a description such as `Z[x]` to `out`.
 *
 * # Safety
 * `ring` must be a live handle; `out` must be valid for writes.
 */
enum IntdefStatus intdef_ring_to_string(const struct IntdefRing *ring, char **out);

/**
 * Parses an element such as `3 + x^2` or `(2+y)*(3+x)`.
 *
 * # Safety
 * `ring` must be a live handle, `source` a valid C string and `out` valid for writes.
 */
enum IntdefStatus intdef_element_parse(const struct IntdefRing *ring,
                                       const char *source,
                                       struct IntdefElement **out);

/**
 * # Safety
 * `element` must be null or a live handle.
 */
void intdef_element_free(struct IntdefElement *element);

/**
 * Canonical display form of an element.
 *
 * # Safety
 * `element` must be a live handle; `out` must be valid for writes.
 */
enum IntdefStatus intdef_element_to_string(const struct IntdefElement *element, char **out);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void intdef_string_free(char *s);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be valid for writes.
 */
enum IntdefStatus intdef_element_add(const struct IntdefElement *a,
                                     const struct IntdefElement *b,
                                     struct IntdefElement **out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be valid for writes.
 */
enum IntdefStatus intdef_element_sub(const struct IntdefElement *a,
                                     const struct IntdefElement *b,
                                     struct IntdefElement **out);

/**
 * `a·b`; the order matters in the quantum plane.
 *
 * # Safety
 * `a`, `b` must be live handles; `out` must be valid for writes.
 */
enum IntdefStatus intdef_element_mul(const struct IntdefElement *a,
                                     const struct IntdefElement *b,
                                     struct IntdefElement **out);

/**
 * # Safety
 * `a` must be a live handle; `out` must be valid for writes.
 */
enum IntdefStatus intdef_element_pow(const struct IntdefElement *a,
                                     uint32_t n,
                                     struct IntdefElement **out);

/**
 * Exact sided division of `g` by `f`. Sets `*divides` and, when it is true,
 * writes the quotient to `quotient`; otherwise `*quotient` is set to null.
 *
 * # Safety
 * `g`, `f` must be live handles; `divides` and `quotient` must be valid for writes.
 */
enum IntdefStatus intdef_element_divide(const struct IntdefElement *g,
                                        const struct IntdefElement *f,
                                        enum IntdefSide side,
                                        bool *divides,
                                        struct IntdefElement **quotient);

/**
 * # Safety
 * `element` must be a live handle; `out` must be valid for writes.
 */
enum IntdefStatus intdef_element_is_unit(const struct IntdefElement *element, bool *out);

/**
 * Writes `n` to `out` when `z = p^n` with `1 ≤ n ≤ max_exp`, else 0.
 *
 * # Safety
 * `z`, `p` must be live handles; `out` must be valid for writes.
 */
enum IntdefStatus intdef_element_is_power_of(const struct IntdefElement *z,
                                             const struct IntdefElement *p,
                                             uint32_t max_exp,
                                             uint32_t *out);

/**
 * Is `t` a natural-number constant, searching powers of `x` up to `max_exp`.
 *
 * # Safety
 * `t` must be a live handle; `out` must be valid for writes.
 */
enum IntdefStatus intdef_decide_natural(const struct IntdefElement *t,
                                        uint32_t max_exp,
                                        struct IntdefDecision *out);

/**
 * Is `t` an integer constant, searching powers of `x` up to `max_exp`.
 *
 * # Safety
 * `t` must be a live handle; `out` must be valid for writes.
 */
enum IntdefStatus intdef_decide_integer(const struct IntdefElement *t,
                                        uint32_t max_exp,
                                        struct IntdefDecision *out);

/**
 * Evaluates a formula with `p = x`, the sets `A` and `POW` registered, the
 * default fragment of degree (or bidegree `degree × degree`) at most
 * `degree` and height `height`, and `count` parameter bindings
 * `names[k] = values[k]`. Writes a JSON object with keys `formula` and
 * `verdict`.
 *
 * # Safety
 * `ring` must be a live handle, `formula` a valid C string, `names` and
 * `values` arrays of `count` valid C strings (either may be null when
 * `count` is 0), and `out` valid for writes.
 */
enum IntdefStatus intdef_eval_formula(const struct IntdefRing *ring,
                                      const char *formula,
                                      const char *const *names,
                                      const char *const *values,
                                      size_t count,
                                      uint32_t degree,
                                      uint32_t height,
                                      char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INTDEF_H */
