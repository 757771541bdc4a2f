/* C ABI for the minprop propagation engine. Generated by cbindgen; do not edit. */

#ifndef MINPROP_H
#define MINPROP_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Graph families constructible through [`minprop_graph_family`].
 */
typedef enum {
  /**
   * `a` vertices; `b` ignored.
   */
  MINPROP_FAMILY_PATH = 0,
  MINPROP_FAMILY_CYCLE = 1,
  MINPROP_FAMILY_COMPLETE = 2,
  MINPROP_FAMILY_STAR = 3,
  /**
   * Bone of `a` vertices, total tooth size `b`.
   */
  MINPROP_FAMILY_COMB = 4,
  /**
   * Balanced `a`-ary tree with `b` levels.
   */
  MINPROP_FAMILY_TREE = 5,
  /**
   * `a` rows by `b` columns.
   */
  MINPROP_FAMILY_GRID = 6,
} MinpropFamily;

/**
 * Which minimum the solver computes.
 */
typedef enum {
  /**
   * Minimum propagating set over all seeds.
   */
  MINPROP_SOLVE_MODE_UNRESTRICTED = 0,
  /**
   * Seeds restricted to degree-1 vertices.
   */
  MINPROP_SOLVE_MODE_LEAVES_ONLY = 1,
  /**
   * Tree oriented away from `root`; forcing follows that flow.
   */
  MINPROP_SOLVE_MODE_TOP_DOWN = 2,
  /**
   * Tree oriented toward `root`.
   */
  MINPROP_SOLVE_MODE_BOTTOM_UP = 3,
} MinpropSolveMode;

/**
 * Result of every call in this interface.
 */
typedef enum {
  MINPROP_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  MINPROP_STATUS_NULL_ARGUMENT = 1,
  /**
   * Malformed input: self-loop, duplicate edge, id out of range, bad
   * family parameters, or a seed that violates a precondition.
   */
  MINPROP_STATUS_INVALID_ARGUMENT = 2,
  MINPROP_STATUS_DISCONNECTED = 3,
  MINPROP_STATUS_NOT_A_TREE = 4,
  /**
   * The request exceeds a documented capacity cap.
   */
  MINPROP_STATUS_CAPACITY_EXCEEDED = 5,
  /**
   * The restricted solve has no propagating subset.
   */
  MINPROP_STATUS_NO_SOLUTION = 6,
  /**
   * The provided buffer is too small; the required length was stored.
   */
  MINPROP_STATUS_BUFFER_TOO_SMALL = 7,
} MinpropStatus;

/**
 * Opaque graph handle.
 */
typedef struct MinpropGraph MinpropGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Version of the underlying engine, as a static NUL-terminated string.
 */
const char *minprop_version(void);

/**
 * Builds a simple undirected graph on `n` vertices from `edge_count` pairs
 * laid out flat as `u0 v0 u1 v1 …`. `edges` may be null when `edge_count`
 * is 0.
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable `uint32_t` values, and
 * `out` must be a valid pointer. A handle returned here must be released
 * with [`minprop_graph_free`].
 */
MinpropStatus minprop_graph_new(uint32_t n,
                                const uint32_t *edges,
                                uintptr_t edge_count,
                                MinpropGraph **out);

/**
 * Builds one of the canonical families; see [`MinpropFamily`] for how the
 * two parameters are read.
 *
 * # Safety
 * `out` must be a valid pointer; the returned handle must be released with
 * [`minprop_graph_free`].
 */
MinpropStatus minprop_graph_family(MinpropFamily family,
                                   uint32_t a,
                                   uint32_t b,
                                   MinpropGraph **out);

/**
 * Releases a graph handle; a null handle is ignored.
 *
 * # Safety
 * `g` must be null or a handle obtained from this interface that has not
 * been freed yet.
 */
void minprop_graph_free(MinpropGraph *g);

/**
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
MinpropStatus minprop_graph_order(const MinpropGraph *g, uint32_t *out);

/**
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
MinpropStatus minprop_graph_edge_count(const MinpropGraph *g, uint64_t *out);

/**
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
MinpropStatus minprop_graph_has_edge(const MinpropGraph *g, uint32_t u, uint32_t v, bool *out);

/**
 * Writes the members of the closure of the seed set, ascending, into
 * `out_members` and their count into `out_len`. With `capacity` too small,
 * returns `BUFFER_TOO_SMALL` after storing the required length; a buffer of
 * the graph order is always enough.
 *
 * # Safety
 * `g` must be a live handle, `seed` must point to `seed_len` readable ids,
 * `out_members` to `capacity` writable slots, and `out_len` must be valid.
 */
MinpropStatus minprop_closure(const MinpropGraph *g,
                              const uint32_t *seed,
                              uintptr_t seed_len,
                              uint32_t *out_members,
                              uintptr_t capacity,
                              uintptr_t *out_len);

/**
 * Whether the seed's closure covers every vertex.
 *
 * # Safety
 * `g` must be a live handle, `seed` must point to `seed_len` readable ids,
 * and `out` must be valid.
 */
MinpropStatus minprop_propagates(const MinpropGraph *g,
                                 const uint32_t *seed,
                                 uintptr_t seed_len,
                                 bool *out);

/**
 * Rounds until the synchronized process covers the graph, or -1 when its
 * fixpoint falls short.
 *
 * # Safety
 * `g` must be a live handle, `seed` must point to `seed_len` readable ids,
 * and `out_rounds` must be valid.
 */
MinpropStatus minprop_synchronized_rounds(const MinpropGraph *g,
                                          const uint32_t *seed,
                                          uintptr_t seed_len,
                                          int64_t *out_rounds);

/**
 * Runs the exact solver. `root` is read only by the top-down and bottom-up
 * modes. `out_size` receives the minimum cardinality. The witness buffer is
 * optional: pass a null `out_witness` to skip it, otherwise `out_witness_len`
 * must be valid and the buffer follows the usual size-query protocol.
 * `out_sets_tested` is optional.
 *
 * # Safety
 * `g` must be a live handle; every non-null pointer must be valid for the
 * access described above.
 */
MinpropStatus minprop_solve(const MinpropGraph *g,
                            MinpropSolveMode mode,
                            uint32_t root,
                            uint32_t *out_size,
                            uint32_t *out_witness,
                            uintptr_t witness_capacity,
                            uintptr_t *out_witness_len,
                            uint64_t *out_sets_tested);

/**
 * Closed form for the minimum seed size of the balanced `m`-ary tree with
 * `k` levels.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
MinpropStatus minprop_tree_pi_formula(uint64_t m, uint32_t k, uint64_t *out);

/**
 * Number of vertices of the balanced `m`-ary tree with `k` levels.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
MinpropStatus minprop_tree_order(uint64_t m, uint32_t k, uint64_t *out);

/**
 * The `i`-th Jacobsthal number; indices above 65 exceed `uint64_t`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
MinpropStatus minprop_jacobsthal(uint32_t i, uint64_t *out);

/**
 * # Safety
 * `out` must be a valid pointer.
 */
MinpropStatus minprop_is_jacobsthal(uint64_t x, bool *out);

/**
 * The alternating sign matrix count A(n) as a newly allocated decimal
 * string; free it with [`minprop_string_free`].
 *
 * # Safety
 * `out` must be a valid pointer.
 */
MinpropStatus minprop_asm_count_string(uint64_t n, char **out);

/**
 * Frees a string returned by this interface; a null pointer is ignored.
 *
 * # Safety
 * `s` must be null or a string obtained from this interface that has not
 * been freed yet.
 */
void minprop_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MINPROP_H */
