#ifndef CYCLEMAX_H
#define CYCLEMAX_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible call.
 */
typedef enum CmStatus {
  CmOk = 0,
  CmErrNullPointer = 1,
  CmErrInvalidArgument = 2,
  CmErrOutOfRange = 3,
  CmErrParse = 4,
  CmErrDomain = 5,
} CmStatus;

/**
 * Opaque graph handle.
 */
typedef struct CmGraph CmGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Create an edgeless graph on `n` vertices.
 */
enum CmStatus cm_graph_new(uintptr_t n, struct CmGraph **out);

/**
 * Parse a graph from UTF-8 text (edge list or graph6, auto-detected).
 */
enum CmStatus cm_graph_parse(const char *text, struct CmGraph **out);

/**
 * Add an undirected edge; rejects loops, duplicates, and out-of-range
 * endpoints.
 */
enum CmStatus cm_graph_add_edge(struct CmGraph *g, uintptr_t u, uintptr_t v);

/**
 * Build the i-th circulant base graph (3i-1 vertices, i-regular).
 */
enum CmStatus cm_graph_gamma(uintptr_t i, struct CmGraph **out);

/**
 * Build a blowup of the i-th circulant base with `len` part sizes.
 */
enum CmStatus cm_graph_gamma_blowup(uintptr_t i,
                                    const uintptr_t *sizes,
                                    uintptr_t len,
                                    struct CmGraph **out);

/**
 * Release a graph handle.  Null is a no-op.
 */
void cm_graph_free(struct CmGraph *g);

/**
 * Number of vertices; zero for a null handle.
 */
uintptr_t cm_graph_vertex_count(const struct CmGraph *g);

/**
 * Number of edges; zero for a null handle.
 */
uintptr_t cm_graph_edge_count(const struct CmGraph *g);

/**
 * Exact cycle count as a decimal string.
 */
enum CmStatus cm_count_cycles(const struct CmGraph *g, char **out);

/**
 * Successor-product cycle bound from the edge count; `full` selects the
 * whole-graph product instead of the per-vertex reduced form.
 */
enum CmStatus cm_edge_bound(uintptr_t n, uintptr_t m, uintptr_t girth, bool full, char **out);

/**
 * Factorial cycle bound for graphs homomorphic to a q-regular base on p
 * vertices.
 */
enum CmStatus cm_hmorph_bound(uintptr_t n, uintptr_t p, uintptr_t q, uintptr_t girth, char **out);

/**
 * Exact cycle count of the balanced complete bipartite graph on n
 * vertices.
 */
enum CmStatus cm_turan_exact(uintptr_t n, char **out);

/**
 * Block-permanent cycle bound for a circulant blowup with the given part
 * sizes.
 */
enum CmStatus cm_gamma_perm_bound(uintptr_t i, const uintptr_t *sizes, uintptr_t len, char **out);

/**
 * Release a string returned by this library.  Null is a no-op.
 */
void cm_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CYCLEMAX_H */
