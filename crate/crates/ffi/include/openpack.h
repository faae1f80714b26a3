#ifndef OPENPACK_H
#define OPENPACK_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Girth reported for acyclic graphs.
 */
#define OP_GIRTH_INFINITE 0

/**
 * Order cap meaning "use the library default".
 */
#define OP_DEFAULT_CAP 0

typedef enum OpFormat {
  OP_FORMAT_EDGE_LIST = 0,
  OP_FORMAT_GRAPH6 = 1,
} OpFormat;

typedef enum OpMode {
  OP_MODE_AUTO = 0,
  OP_MODE_STRUCTURAL = 1,
  OP_MODE_BRUTE = 2,
} OpMode;

typedef enum OpStatus {
  OP_STATUS_OK = 0,
  OP_STATUS_NULL_POINTER = 1,
  OP_STATUS_INVALID_UTF8 = 2,
  OP_STATUS_RANGE = 3,
  OP_STATUS_LOOP = 4,
  OP_STATUS_PARSE = 5,
  OP_STATUS_CAP_EXCEEDED = 6,
  OP_STATUS_ISOLATED_VERTEX = 7,
  OP_STATUS_DISCONNECTED = 8,
  OP_STATUS_NOT_A_SUPPORT = 9,
  OP_STATUS_NOT_A_STRONG_SUPPORT = 10,
  OP_STATUS_SPEC = 11,
  OP_STATUS_INVALID_ARGUMENT = 12,
  OP_STATUS_PANIC = 100,
} OpStatus;

typedef enum OpVerdict {
  OP_VERDICT_IN_U = 0,
  OP_VERDICT_NOT_IN_U = 1,
  OP_VERDICT_UNDECIDED = 2,
} OpVerdict;

/**
 * Opaque graph handle.
 */
typedef struct OpGraph OpGraph;

/**
 * Extremes of the maximal open packing sizes.
 */
typedef struct OpPackingReport {
  size_t rho_open;
  size_t rho_open_lower;
  /**
   * Number of maximal open packings, or 0 when enumeration hit its cutoff.
   */
  uint64_t count;
  bool uniform;
} OpPackingReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL after a
 * successful call. The pointer stays valid until the next library call on
 * this thread.
 */
const char *op_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *op_version(void);

/**
 * Builds a graph on `n` vertices from `m` edges stored as `2*m` endpoints.
 *
 * # Safety
 * `edges` must point to `2*m` readable values (it may be NULL when `m` is 0)
 * and `out` must be writable.
 */
enum OpStatus op_graph_new(size_t n, const size_t *edges, size_t m, struct OpGraph **out);

/**
 * Parses an edge list or a graph6 line.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` must be writable.
 */
enum OpStatus op_graph_parse(const char *text, enum OpFormat format, struct OpGraph **out);

/**
 * Serializes the graph; release the result with [`op_string_free`].
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum OpStatus op_graph_write(const struct OpGraph *g, enum OpFormat format, char **out);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `g` must be NULL or a handle not yet freed.
 */
void op_graph_free(struct OpGraph *g);

/**
 * Number of vertices; 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t op_graph_order(const struct OpGraph *g);

/**
 * Number of edges; 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t op_graph_size(const struct OpGraph *g);

/**
 * Length of a shortest cycle, or [`OP_GIRTH_INFINITE`] for forests.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum OpStatus op_graph_girth(const struct OpGraph *g, size_t *out);

/**
 * ρ°, ρ°ₗ and the number of maximal open packings. `cap` bounds the order;
 * pass [`OP_DEFAULT_CAP`] for the default.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum OpStatus op_packing_report(const struct OpGraph *g, size_t cap, struct OpPackingReport *out);

/**
 * Decides whether all maximal open packings have one size.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum OpStatus op_decide(const struct OpGraph *g, enum OpMode mode, size_t cap, enum OpVerdict *out);

/**
 * Runs the partition recognizer. On acceptance `*accepted` is true and
 * `*predicted` holds the common size of every maximal open packing; on
 * rejection `*condition` holds the index (0 to 6) of the first violated condition.
 * Any output pointer may be NULL.
 *
 * # Safety
 * `g` must be a live handle; non-NULL outputs must be writable.
 */
enum OpStatus op_recognize(const struct OpGraph *g,
                           bool *accepted,
                           size_t *predicted,
                           uint8_t *condition);

/**
 * Full JSON report: invariants, packing report and diagnosis under `mode`.
 * Release the result with [`op_string_free`].
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum OpStatus op_report_json(const struct OpGraph *g, enum OpMode mode, size_t cap, char **out);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must be NULL or a string from this library not yet freed.
 */
void op_string_free(char *s);

/**
 * Path on `n >= 1` vertices.
 *
 * # Safety
 * `out` must be writable.
 */
enum OpStatus op_gen_path(size_t n, struct OpGraph **out);

/**
 * Cycle on `n >= 3` vertices.
 *
 * # Safety
 * `out` must be writable.
 */
enum OpStatus op_gen_cycle(size_t n, struct OpGraph **out);

/**
 * Two subdivided stars with `n` legs each, centers adjacent.
 *
 * # Safety
 * `out` must be writable.
 */
enum OpStatus op_gen_t(size_t n, struct OpGraph **out);

/**
 * Two hubs joined by `n` internally disjoint paths of length 7.
 *
 * # Safety
 * `out` must be writable.
 */
enum OpStatus op_gen_gk(size_t n, struct OpGraph **out);

/**
 * Random labeled tree on `n` vertices, reproducible from `seed`.
 *
 * # Safety
 * `out` must be writable.
 */
enum OpStatus op_gen_random_tree(size_t n, uint64_t seed, struct OpGraph **out);

/**
 * Attaches a pendant path of length 3 at every vertex of `h`. Vertex `i` of
 * `h` keeps index `i` in the result.
 *
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum OpStatus op_embed_in_u(const struct OpGraph *h, struct OpGraph **out);

/**
 * Random double-star tree with `2..=max_stars` stars.
 *
 * # Safety
 * `out` must be writable.
 */
enum OpStatus op_gen_f_tree(size_t max_stars, uint64_t seed, struct OpGraph **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* OPENPACK_H */
