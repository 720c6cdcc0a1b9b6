#ifndef PDOM_H
#define PDOM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Branch of the formula, mirroring `pdom::Case`.
 */
typedef enum PdomCase {
  PDOM_CASE_ALL_VERTICES = 0,
  PDOM_CASE_FULL_PARTS = 1,
  PDOM_CASE_BALANCED = 2,
} PdomCase;

/**
 * State of an optional `s2` value.
 */
typedef enum PdomDemandKind {
  PDOM_DEMAND_KIND_ABSENT = 0,
  PDOM_DEMAND_KIND_FINITE = 1,
  PDOM_DEMAND_KIND_INFINITE = 2,
} PdomDemandKind;

/**
 * Status codes returned by every fallible function.
 */
typedef enum PdomStatus {
  PDOM_STATUS_OK = 0,
  PDOM_STATUS_INVALID_ARGUMENT = 1,
  PDOM_STATUS_PRECONDITION = 2,
  PDOM_STATUS_RESOURCE_LIMIT = 3,
  PDOM_STATUS_PARSE = 4,
  PDOM_STATUS_NULL_POINTER = 5,
  PDOM_STATUS_BUFFER_TOO_SMALL = 6,
  PDOM_STATUS_PANIC = 7,
} PdomStatus;

/**
 * Which witness subset to read from a result.
 */
typedef enum PdomWitnessKind {
  PDOM_WITNESS_KIND_S1 = 0,
  PDOM_WITNESS_KIND_S2 = 1,
} PdomWitnessKind;

/**
 * Opaque explicit graph.
 */
typedef struct PdomGraph PdomGraph;

/**
 * Opaque part-size list.
 */
typedef struct PdomParts PdomParts;

/**
 * Opaque gamma result with its witnesses.
 */
typedef struct PdomResult PdomResult;

/**
 * Caps for the exhaustive routines; see [`pdom_limits_default`].
 */
typedef struct PdomLimits {
  uint64_t max_vertices;
  uint64_t max_states;
  uint64_t max_generic_vertices;
} PdomLimits;

/**
 * Scalar part of a gamma computation.
 */
typedef struct PdomSummary {
  uint64_t gamma;
  uint64_t p;
  enum PdomCase case_;
  bool has_s1;
  uint64_t s1;
  enum PdomDemandKind s2_kind;
  /**
   * Meaningful only when `s2_kind` is `Finite`.
   */
  uint64_t s2;
} PdomSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer is
 * valid until the next call into this library on the same thread.
 */
const char *pdom_last_error(void);

/**
 * Static name of a status code.
 */
const char *pdom_status_name(enum PdomStatus status);

struct PdomLimits pdom_limits_default(void);

/**
 * Creates a part list from `len` sizes.
 *
 * # Safety
 * `sizes` must point to `len` readable values; `out` must be writable.
 */
enum PdomStatus pdom_parts_new(const uint64_t *sizes, size_t len, struct PdomParts **out);

/**
 * Parses a comma-separated part list such as `"2,2,10,17"`.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string; `out` must be writable.
 */
enum PdomStatus pdom_parts_parse(const char *text, struct PdomParts **out);

/**
 * # Safety
 * `parts` must be null or a handle from this library not freed before.
 */
void pdom_parts_free(struct PdomParts *parts);

/**
 * Number of parts, or 0 for a null handle.
 *
 * # Safety
 * `parts` must be null or a live handle.
 */
size_t pdom_parts_len(const struct PdomParts *parts);

/**
 * Total vertex count, or 0 for a null handle.
 *
 * # Safety
 * `parts` must be null or a live handle.
 */
uint64_t pdom_parts_total(const struct PdomParts *parts);

/**
 * Computes gamma_p with s1, s2, witnesses and witness counts.
 *
 * # Safety
 * `parts` must be a live handle; `out` must be writable.
 */
enum PdomStatus pdom_compute(const struct PdomParts *parts, uint64_t p, struct PdomResult **out);

/**
 * # Safety
 * `result` must be null or a handle from [`pdom_compute`] not freed before.
 */
void pdom_result_free(struct PdomResult *result);

/**
 * # Safety
 * `result` must be a live handle; `out` must be writable.
 */
enum PdomStatus pdom_result_summary(const struct PdomResult *result, struct PdomSummary *out);

/**
 * Writes the 0-based part indices of a witness subset. `out_present` is
 * false (and `out_len` 0) when the witness is absent.
 *
 * # Safety
 * `result` must be a live handle; `buf` must hold `cap` values; the out
 * pointers must be writable.
 */
enum PdomStatus pdom_result_witness_set(const struct PdomResult *result,
                                        enum PdomWitnessKind which,
                                        size_t *buf,
                                        size_t cap,
                                        size_t *out_len,
                                        bool *out_present);

/**
 * Writes the per-part counts of a minimum p-dominating set.
 *
 * # Safety
 * `result` must be a live handle; `buf` must hold `cap` values.
 */
enum PdomStatus pdom_result_witness_counts(const struct PdomResult *result,
                                           uint64_t *buf,
                                           size_t cap,
                                           size_t *out_len);

/**
 * Count-vector oracle: minimum and lexicographically least optimal counts.
 *
 * # Safety
 * `parts` must be a live handle; `limits` may be null for defaults; `buf`
 * must hold `cap` values; out pointers must be writable.
 */
enum PdomStatus pdom_oracle_counts(const struct PdomParts *parts,
                                   uint64_t p,
                                   const struct PdomLimits *limits,
                                   uint64_t *out_value,
                                   uint64_t *buf,
                                   size_t cap,
                                   size_t *out_len);

/**
 * Builds a graph from `edge_count` pairs stored flat in `edges`.
 *
 * # Safety
 * `edges` must hold `2 * edge_count` values; `out` must be writable.
 */
enum PdomStatus pdom_graph_new(size_t vertex_count,
                               const size_t *edges,
                               size_t edge_count,
                               struct PdomGraph **out);

/**
 * Parses the edge-list text format (`n m`, then `m` lines `u v`).
 *
 * # Safety
 * `text` must be a valid NUL-terminated string; `out` must be writable.
 */
enum PdomStatus pdom_graph_parse(const char *text, struct PdomGraph **out);

/**
 * Expands a part list into the explicit complete multipartite graph.
 *
 * # Safety
 * `parts` must be a live handle; `limits` may be null; `out` writable.
 */
enum PdomStatus pdom_graph_from_parts(const struct PdomParts *parts,
                                      const struct PdomLimits *limits,
                                      struct PdomGraph **out);

/**
 * # Safety
 * `graph` must be null or a handle from this library not freed before.
 */
void pdom_graph_free(struct PdomGraph *graph);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `graph` must be null or a live handle.
 */
size_t pdom_graph_vertex_count(const struct PdomGraph *graph);

/**
 * Checks whether `ids` is p-dominating in `graph`.
 *
 * # Safety
 * `graph` must be a live handle; `ids` must hold `len` values;
 * `out` must be writable.
 */
enum PdomStatus pdom_is_p_dominating(const struct PdomGraph *graph,
                                     const size_t *ids,
                                     size_t len,
                                     uint64_t p,
                                     bool *out);

/**
 * Exact gamma_p of an arbitrary graph. With `branch_and_bound` false the
 * witness is the lexicographically least minimum set.
 *
 * # Safety
 * `graph` must be a live handle; `limits` may be null; `buf` must hold
 * `cap` values; out pointers must be writable.
 */
enum PdomStatus pdom_oracle_generic(const struct PdomGraph *graph,
                                    uint64_t p,
                                    bool branch_and_bound,
                                    const struct PdomLimits *limits,
                                    uint64_t *out_value,
                                    size_t *buf,
                                    size_t cap,
                                    size_t *out_len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PDOM_H */
