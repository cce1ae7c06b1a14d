#ifndef TREETOPO_H
#define TREETOPO_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TtStatus {
  TT_STATUS_OK = 0,
  TT_STATUS_INFEASIBLE = 1,
  TT_STATUS_MALFORMED = 2,
  TT_STATUS_INVALID_INPUT = 3,
  TT_STATUS_RESOURCE_LIMIT = 4,
  TT_STATUS_CONTRACT = 5,
  TT_STATUS_NULL_ARGUMENT = 6,
  TT_STATUS_PANIC = 7,
} TtStatus;

/**
 * Opaque rooted tree.
 */
typedef struct TtTree TtTree;

/**
 * Candidate non-tree edge for cycle completion.
 */
typedef struct TtExtraEdge {
  size_t u;
  size_t v;
  int64_t w;
} TtExtraEdge;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next call into this library from the same thread.
 */
const char *tt_last_error(void);

/**
 * Frees a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void tt_string_free(char *s);

/**
 * Builds a tree on vertices 1..=n from `n - 1` edges given as pairs
 * `edges[2i], edges[2i+1]`, rooted at `root`.
 *
 * # Safety
 * `edges` must point to `2 * (n - 1)` values; `out` must be writable.
 */
enum TtStatus tt_tree_new(size_t n, const size_t *edges, size_t root, struct TtTree **out);

/**
 * Attaches `weights[v - 1]` to each vertex v.
 *
 * # Safety
 * `tree` must be live; `weights` must point to n values.
 */
enum TtStatus tt_tree_set_vertex_weights(struct TtTree *tree, const int64_t *weights);

/**
 * # Safety
 * `tree` must be null or a live handle from [`tt_tree_new`].
 */
void tt_tree_free(struct TtTree *tree);

/**
 * # Safety
 * `tree` must be live.
 */
size_t tt_tree_size(const struct TtTree *tree);

/**
 * Grundy number of the tree.
 *
 * # Safety
 * `tree` must be live; `out` writable.
 */
enum TtStatus tt_grundy(const struct TtTree *tree, uint32_t *out);

/**
 * Connected parts of sizes in [Q, 3Q-3]. Writes `part_of[v - 1]` (1-based
 * part ids) for every vertex and the number of parts.
 *
 * # Safety
 * `tree` must be live; `part_of` must hold n values; `part_count` writable.
 */
enum TtStatus tt_partition_bounded(const struct TtTree *tree,
                                   size_t q,
                                   size_t *part_of,
                                   size_t *part_count);

/**
 * Minimum total weight of extra edges putting every vertex on exactly one
 * cycle. `chosen` (m bytes, may be null) receives 1 for selected edges.
 *
 * # Safety
 * `tree` must be live; `extras` must hold m edges; `total` writable.
 */
enum TtStatus tt_cycle_complete(const struct TtTree *tree,
                                const struct TtExtraEdge *extras,
                                size_t m,
                                int64_t *total,
                                uint8_t *chosen);

/**
 * Weight of a maximum matching over tree edges and sibling pairs, edge
 * weight |w(u) - w(v)|. Needs vertex weights.
 *
 * # Safety
 * `tree` must be live; `out` writable.
 */
enum TtStatus tt_extended_matching(const struct TtTree *tree, int64_t *out);

/**
 * Minimum root height of a strict binary tree over the leaf heights, in order.
 *
 * # Safety
 * `heights` must hold n values; `out` writable.
 */
enum TtStatus tt_min_height(const int64_t *heights, size_t n, int64_t *out);

/**
 * Labeled trees on n vertices with exactly p leaves, as a decimal string
 * to be released with [`tt_string_free`].
 *
 * # Safety
 * `out` must be writable.
 */
enum TtStatus tt_count_labeled_leaves(size_t n, size_t p, char **out);

/**
 * Runs the command-line tool in-process with `argv[0..argc]` (argv[0] is
 * the program name) and stores its exit code (0 ok, 2 infeasible, 1 error).
 *
 * # Safety
 * `argv` must hold `argc` NUL-terminated strings; `exit_code` writable.
 */
enum TtStatus tt_cli_run(size_t argc, const char *const *argv, int32_t *exit_code);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TREETOPO_H */
