#ifndef SUPERQ_H
#define SUPERQ_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SuperqMethod {
  /**
   * Explicit bottom/roof rules.
   */
  SUPERQ_METHOD_DIRECT = 0,
  /**
   * Through the equivalence with Gl(m-1) x Gl(1) x Gl(1).
   */
  SUPERQ_METHOD_QUOTIENT = 1,
} SuperqMethod;

typedef enum SuperqStatus {
  SUPERQ_STATUS_OK = 0,
  SUPERQ_STATUS_NULL_POINTER = 1,
  SUPERQ_STATUS_PARSE = 2,
  SUPERQ_STATUS_INVALID_WEIGHT = 3,
  SUPERQ_STATUS_INVALID_LABEL = 4,
  SUPERQ_STATUS_NEGLIGIBLE = 5,
  SUPERQ_STATUS_RANK_MISMATCH = 6,
  SUPERQ_STATUS_UNSUPPORTED = 7,
  SUPERQ_STATUS_OVERFLOW = 8,
  SUPERQ_STATUS_INTERNAL = 9,
} SuperqStatus;

/**
 * An indecomposable module of an atypical block.
 */
typedef struct SuperqLabel SuperqLabel;

/**
 * An object of the semisimple quotient: a multiset of non-negligible labels.
 */
typedef struct SuperqObject SuperqObject;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread; empty if none. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *superq_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *superq_version(void);

/**
 * # Safety
 * `s` must come from this library or be null.
 */
void superq_string_free(char *s);

/**
 * Parses `irr@v/block=c1,...`, `roof@lo:hi/block=...`, ... or a highest
 * weight `a1,...,am/b` (its simple module).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` writable.
 */
enum SuperqStatus superq_label_parse(const char *text, struct SuperqLabel **out);

/**
 * # Safety
 * `x` must come from [`superq_label_parse`] or be null.
 */
void superq_label_free(struct SuperqLabel *x);

/**
 * Rank `m` of the ambient Gl(m|1).
 *
 * # Safety
 * `x` must be a live label.
 */
enum SuperqStatus superq_label_rank(const struct SuperqLabel *x, size_t *out);

/**
 * # Safety
 * `x` must be a live label and `out` writable.
 */
enum SuperqStatus superq_label_to_string(const struct SuperqLabel *x, char **out);

/**
 * The image `{d, b, core, parity}` of a non-negligible label, as JSON.
 *
 * # Safety
 * `x` must be a live label and `out` writable.
 */
enum SuperqStatus superq_label_rho_json(const struct SuperqLabel *x, char **out);

/**
 * Image of a label in the quotient; negligible labels give the zero object.
 *
 * # Safety
 * `x` must be a live label and `out` writable.
 */
enum SuperqStatus superq_object_from_label(const struct SuperqLabel *x, struct SuperqObject **out);

/**
 * The unit object of Gl(m|1).
 *
 * # Safety
 * `out` must be writable.
 */
enum SuperqStatus superq_object_unit(size_t m, struct SuperqObject **out);

/**
 * # Safety
 * `x` must come from this library or be null.
 */
void superq_object_free(struct SuperqObject *x);

/**
 * # Safety
 * `a`, `b` must be live objects and `out` writable.
 */
enum SuperqStatus superq_object_tensor(const struct SuperqObject *a,
                                       const struct SuperqObject *b,
                                       enum SuperqMethod method,
                                       struct SuperqObject **out);

/**
 * Number of simple summands counted with multiplicity.
 *
 * # Safety
 * `x` must be a live object and `out` writable.
 */
enum SuperqStatus superq_object_length(const struct SuperqObject *x, uint64_t *out);

/**
 * # Safety
 * `x` must be a live object and `out` writable.
 */
enum SuperqStatus superq_object_superdimension(const struct SuperqObject *x, int64_t *out);

/**
 * # Safety
 * `a`, `b` must be live objects and `out` writable.
 */
enum SuperqStatus superq_object_equal(const struct SuperqObject *a,
                                      const struct SuperqObject *b,
                                      bool *out);

/**
 * JSON array of `[label, multiplicity]` pairs.
 *
 * # Safety
 * `x` must be a live object and `out` writable.
 */
enum SuperqStatus superq_object_to_json(const struct SuperqObject *x, char **out);

/**
 * Weight diagram of `a1,...,am/b` as a JSON array of `[position, mark]`.
 *
 * # Safety
 * `weight` must be a NUL-terminated string and `out` writable.
 */
enum SuperqStatus superq_diagram_json(const char *weight, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SUPERQ_H */
