#ifndef MORSETILES_H
#define MORSETILES_H

/* Generated by the morsetiles-ffi build script; edit src/lib.rs instead. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status of an ABI call; zero is success.
 */
typedef enum MtStatus {
  MT_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  MT_STATUS_NULL_ARGUMENT = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  MT_STATUS_INVALID_UTF8 = 2,
  /**
   * The input was read but violates a constructor contract.
   */
  MT_STATUS_BAD_INPUT = 3,
  /**
   * A verification predicate rejected the object; the message names the
   * first offending face or tile.
   */
  MT_STATUS_FAILED_CHECK = 4,
  /**
   * A count or coefficient left the integer range.
   */
  MT_STATUS_OVERFLOW = 5,
  /**
   * The requested dimension is out of the supported range.
   */
  MT_STATUS_UNSUPPORTED = 6,
  /**
   * An internal invariant failed.
   */
  MT_STATUS_PANIC = 7,
} MtStatus;

/**
 * A tiled simplicial complex with its tiles in claimed shelling order.
 *
 * Constructions that measure their h-vector against a closed formula keep
 * the comparison here too, so it reaches the report.
 */
typedef struct MtTiling MtTiling;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static string; do not free.
 */
const char *mt_version(void);

/**
 * Message of the last failure on this thread, empty before any failure.
 * The pointer stays valid until the next failing call on the same thread;
 * do not free.
 */
const char *mt_last_error_message(void);

/**
 * Releases a string returned through an out-parameter. Null is ignored.
 *
 * # Safety
 * `s` must have come from this library and not have been freed before.
 */
void mt_string_free(char *s);

/**
 * Releases a tiling handle. Null is ignored.
 *
 * # Safety
 * `t` must have come from this library and not have been freed before.
 */
void mt_tiling_free(struct MtTiling *t);

/**
 * The closed n-simplex as a single closed tile.
 *
 * # Safety
 * `out` must be a valid location for a pointer.
 */
enum MtStatus mt_closed_simplex_tiling(size_t n, struct MtTiling **out);

/**
 * Shelling of the boundary of the (n+1)-simplex, an n-sphere.
 *
 * # Safety
 * `out` must be a valid location for a pointer.
 */
enum MtStatus mt_boundary_simplex_shelling(size_t n, struct MtTiling **out);

/**
 * The boundary of a triangle tiled as a fan: one closed vertex, the rest
 * half-open edges.
 *
 * # Safety
 * `out` must be a valid location for a pointer.
 */
enum MtStatus mt_boundary_triangle_fan(struct MtTiling **out);

/**
 * Morse shelling of the octahedron with critical tiles of index 0, 1, 2.
 *
 * # Safety
 * `out` must be a valid location for a pointer.
 */
enum MtStatus mt_octahedron_tiling(struct MtTiling **out);

/**
 * Morse shelling of a cylinder capped by a disc, with two index-2
 * critical tiles.
 *
 * # Safety
 * `out` must be a valid location for a pointer.
 */
enum MtStatus mt_capped_cylinder_tiling(struct MtTiling **out);

/**
 * Morse shelling of the product of an open k-simplex with a closed
 * (n-k)-simplex, the n-dimensional handle of index k.
 *
 * # Safety
 * `out` must be a valid location for a pointer.
 */
enum MtStatus mt_handle_tiling(size_t k, size_t n, struct MtTiling **out);

/**
 * Shelled primitive triangulation of the product of two closed simplices.
 *
 * # Safety
 * `out` must be a valid location for a pointer.
 */
enum MtStatus mt_product_shelling(size_t n, size_t m, struct MtTiling **out);

/**
 * Shelling of the product of an n-sphere with an m-torus, m >= 1, using
 * no critical tile. The handle keeps the h-vector formula comparison; it
 * shows up in the report.
 *
 * # Safety
 * `out` must be a valid location for a pointer.
 */
enum MtStatus mt_sphere_torus_tiling(size_t n, size_t m, struct MtTiling **out);

/**
 * Morse shelling of the product of two tame tilings, critical tiles
 * multiplying pairwise with indices adding.
 *
 * # Safety
 * `a` and `b` must be live handles and `out` a valid location for a
 * pointer.
 */
enum MtStatus mt_tiling_product(const struct MtTiling *a,
                                const struct MtTiling *b,
                                struct MtTiling **out);

/**
 * Reads a tiling from its JSON wire form and verifies that the tiles tile
 * the complex. The shelling flag is measured from the listed order, not
 * trusted.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid location for a
 * pointer.
 */
enum MtStatus mt_tiling_from_json(const char *json, struct MtTiling **out);

/**
 * Prints a tiling in its JSON wire form.
 *
 * # Safety
 * `t` must be a live handle and `out` a valid location for a pointer.
 */
enum MtStatus mt_tiling_to_json(const struct MtTiling *t, char **out);

/**
 * Re-runs the tiling checks, or the full shelling check when
 * `as_shelling` is set. Zero means the property holds; a failed check
 * leaves its witness in the error message.
 *
 * # Safety
 * `t` must be a live handle.
 */
enum MtStatus mt_tiling_verify(const struct MtTiling *t, bool as_shelling);

/**
 * Prints the measured summary as JSON: h- and c-vectors with palindromy
 * flags, Euler characteristic, purity, the critical census and, when the
 * construction carried one, the formula comparison. Pass the hint when
 * the tiled set is a closed manifold of even dimension to have the
 * Dehn-Sommerville check included.
 *
 * # Safety
 * `t` must be a live handle and `out` a valid location for a pointer.
 */
enum MtStatus mt_tiling_report_json(const struct MtTiling *t,
                                    bool closed_manifold_hint,
                                    char **out);

/**
 * Number of tiles.
 *
 * # Safety
 * `t` must be a live handle and `out` a valid location for a usize.
 */
enum MtStatus mt_tiling_tile_count(const struct MtTiling *t, size_t *out);

/**
 * Euler characteristic of the underlying complex.
 *
 * # Safety
 * `t` must be a live handle and `out` a valid location for an i64.
 */
enum MtStatus mt_tiling_euler(const struct MtTiling *t, int64_t *out);

/**
 * Whether the tile order was verified to be a shelling when the handle
 * was built.
 *
 * # Safety
 * `t` must be a live handle and `out` a valid location for a bool.
 */
enum MtStatus mt_tiling_is_shelling(const struct MtTiling *t, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MORSETILES_H */
