#ifndef TOPOCTL_H
#define TOPOCTL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum TopoStatus {
  TOPO_STATUS_OK = 0,
  TOPO_STATUS_NULL_POINTER = 1,
  TOPO_STATUS_INVALID_UTF8 = 2,
  TOPO_STATUS_PARSE = 3,
  TOPO_STATUS_TOPOLOGY = 4,
  TOPO_STATUS_UNKNOWN_PROPERTY = 5,
  TOPO_STATUS_UNKNOWN_CLASS = 6,
  TOPO_STATUS_KB = 7,
  TOPO_STATUS_BUFFER_TOO_SMALL = 8,
  TOPO_STATUS_PANIC = 99,
} TopoStatus;

/**
 * Value of a property on a space. `Undecided` means the checker refused the
 * space, usually because it is too large.
 */
typedef enum TopoTruth {
  TOPO_TRUTH_FALSE = 0,
  TOPO_TRUTH_TRUE = 1,
  TOPO_TRUTH_UNDECIDED = 2,
} TopoTruth;

/**
 * Status of `P => Q` in a knowledge base.
 */
typedef enum TopoImplication {
  TOPO_IMPLICATION_IMPLIES = 0,
  TOPO_IMPLICATION_NOT_IMPLIES = 1,
  TOPO_IMPLICATION_UNKNOWN = 2,
} TopoImplication;

/**
 * A knowledge base with all derivable traits filled in.
 */
typedef struct TopoKb TopoKb;

/**
 * A finite topological space.
 */
typedef struct TopoSpace TopoSpace;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null after a
 * successful call. The pointer stays valid until the next call on the same
 * thread.
 */
const char *topo_last_error(void);

/**
 * Library version as a static string.
 */
const char *topo_version(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed already.
 */
void topo_string_free(char *s);

/**
 * Builds a space on `n` points from its open sets, given as bitmasks where
 * bit `i` stands for point `i`.
 *
 * # Safety
 * `opens` must point to `len` readable values (it may be null when `len` is
 * zero) and `out` must be writable.
 */
enum TopoStatus topo_space_from_opens(size_t n,
                                      const uint64_t *opens,
                                      size_t len,
                                      struct TopoSpace **out);

/**
 * Parses a space written in the text format. The text must define exactly
 * one space.
 *
 * # Safety
 * `source` must be a NUL-terminated string and `out` must be writable.
 */
enum TopoStatus topo_space_parse(const char *source, struct TopoSpace **out);

/**
 * Releases a space. Null is ignored.
 *
 * # Safety
 * `space` must come from this library and not have been freed already.
 */
void topo_space_free(struct TopoSpace *space);

/**
 * Number of points, or zero for null.
 *
 * # Safety
 * `space` must be null or a live handle.
 */
size_t topo_space_points(const struct TopoSpace *space);

/**
 * Number of open sets, or zero for null.
 *
 * # Safety
 * `space` must be null or a live handle.
 */
size_t topo_space_open_count(const struct TopoSpace *space);

/**
 * Copies the open sets, in ascending bitmask order, into `buf`. The total
 * count is always stored in `written`; when it exceeds `cap` nothing is
 * copied and `BufferTooSmall` is returned.
 *
 * # Safety
 * `buf` must have room for `cap` values (it may be null when `cap` is zero)
 * and `written` must be writable.
 */
enum TopoStatus topo_space_opens(const struct TopoSpace *space,
                                 uint64_t *buf,
                                 size_t cap,
                                 size_t *written);

/**
 * Closure of a set of points.
 *
 * # Safety
 * `space` must be a live handle and `out` must be writable.
 */
enum TopoStatus topo_space_closure(const struct TopoSpace *space, uint64_t set, uint64_t *out);

/**
 * Evaluates a named property such as `T0`, `US` or `KC`.
 *
 * # Safety
 * `space` must be a live handle, `id` a NUL-terminated string and `out`
 * writable.
 */
enum TopoStatus topo_space_property(const struct TopoSpace *space,
                                    const char *id,
                                    enum TopoTruth *out);

/**
 * Coreflection onto the spaces generated by a built-in test class: `P`
 * (indiscrete pair), `A` (Sierpinski space) or `Sfin` (convergent
 * sequences).
 *
 * # Safety
 * `space` must be a live handle, `class` a NUL-terminated string and `out`
 * writable.
 */
enum TopoStatus topo_space_coreflect(const struct TopoSpace *space,
                                     const char *class_,
                                     struct TopoSpace **out);

/**
 * Renders a space in the text format under the given name. Free the result
 * with [`topo_string_free`].
 *
 * # Safety
 * `space` must be a live handle, `name` a NUL-terminated string and `out`
 * writable.
 */
enum TopoStatus topo_space_render(const struct TopoSpace *space, const char *name, char **out);

/**
 * Loads the knowledge base bundled with the library.
 *
 * # Safety
 * `out` must be writable.
 */
enum TopoStatus topo_kb_shipped(struct TopoKb **out);

/**
 * Loads a knowledge base from a JSON file.
 *
 * # Safety
 * `path` must be a NUL-terminated string and `out` writable.
 */
enum TopoStatus topo_kb_load(const char *path, struct TopoKb **out);

/**
 * Releases a knowledge base. Null is ignored.
 *
 * # Safety
 * `kb` must come from this library and not have been freed already.
 */
void topo_kb_free(struct TopoKb *kb);

/**
 * Decides whether `p => q`. When `witness` is non-null it receives the name
 * of a counterexample space for `NotImplies` and null otherwise; free it
 * with [`topo_string_free`].
 *
 * # Safety
 * `kb` must be a live handle, `p` and `q` NUL-terminated strings, `out`
 * writable and `witness` null or writable.
 */
enum TopoStatus topo_kb_status(const struct TopoKb *kb,
                               const char *p,
                               const char *q,
                               enum TopoImplication *out,
                               char **witness);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TOPOCTL_H */
