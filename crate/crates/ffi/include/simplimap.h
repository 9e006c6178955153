#ifndef SIMPLIMAP_H
#define SIMPLIMAP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SmStatus {
  SM_STATUS_OK = 0,
  SM_STATUS_NULL_ARGUMENT = 1,
  SM_STATUS_INVALID_UTF8 = 2,
  SM_STATUS_PARSE = 3,
  SM_STATUS_INVALID_INPUT = 4,
  SM_STATUS_CHECK_FAILED = 5,
  SM_STATUS_INTERNAL = 6,
} SmStatus;

/**
 * A pure simplicial complex.
 */
typedef struct SmComplex SmComplex;

/**
 * A certified construction.
 */
typedef struct SmConstruction SmConstruction;

/**
 * A simplicial map between oriented complexes.
 */
typedef struct SmMap SmMap;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *sm_version(void);

/**
 * Message of the last failed call on this thread, or NULL. Valid until the
 * next library call on the same thread.
 */
const char *sm_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library.
 */
void sm_string_free(char *s);

/**
 * Builds and certifies a degree-`d` map from an `n`-sphere onto the boundary
 * of the `(n+1)`-simplex.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum SmStatus sm_construct(size_t n, int64_t d, struct SmConstruction **out);

/**
 * # Safety
 * `c` must be NULL or a handle from [`sm_construct`], not used afterwards.
 */
void sm_construction_free(struct SmConstruction *c);

/**
 * # Safety
 * `c` must be a live construction handle and `out` a valid pointer.
 */
enum SmStatus sm_construction_vertex_count(const struct SmConstruction *c, size_t *out);

/**
 * # Safety
 * `c` must be a live construction handle and `out` a valid pointer.
 */
enum SmStatus sm_construction_paper_bound(const struct SmConstruction *c, size_t *out);

/**
 * Degree by signed facet count.
 *
 * # Safety
 * `c` must be a live construction handle and `out` a valid pointer.
 */
enum SmStatus sm_construction_degree(const struct SmConstruction *c, int64_t *out);

/**
 * # Safety
 * `c` must be a live construction handle and `out` a valid pointer.
 */
enum SmStatus sm_construction_verified(const struct SmConstruction *c, bool *out);

/**
 * Map file JSON; free with [`sm_string_free`].
 *
 * # Safety
 * `c` must be a live construction handle and `out` a valid pointer.
 */
enum SmStatus sm_construction_map_json(const struct SmConstruction *c, char **out);

/**
 * Certificate JSON without a map file reference; free with
 * [`sm_string_free`].
 *
 * # Safety
 * `c` must be a live construction handle and `out` a valid pointer.
 */
enum SmStatus sm_construction_certificate_json(const struct SmConstruction *c, char **out);

/**
 * Parses a map file with inline complexes.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SmStatus sm_map_from_json(const char *json, struct SmMap **out);

/**
 * # Safety
 * `m` must be NULL or a handle from [`sm_map_from_json`], not used afterwards.
 */
void sm_map_free(struct SmMap *m);

/**
 * Signed-count degree; [`SmStatus::CheckFailed`] when the map is not
 * simplicial or target facets disagree.
 *
 * # Safety
 * `m` must be a live map handle and `out` a valid pointer.
 */
enum SmStatus sm_map_degree(const struct SmMap *m, int64_t *out);

/**
 * Degree from the induced map on top homology.
 *
 * # Safety
 * `m` must be a live map handle and `out` a valid pointer.
 */
enum SmStatus sm_map_degree_homology(const struct SmMap *m, int64_t *out);

/**
 * Parses a complex file (facets or construction tree).
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SmStatus sm_complex_from_json(const char *json, struct SmComplex **out);

/**
 * # Safety
 * `k` must be NULL or a handle from [`sm_complex_from_json`], not used
 * afterwards.
 */
void sm_complex_free(struct SmComplex *k);

/**
 * # Safety
 * `k` must be a live complex handle and `out` a valid pointer.
 */
enum SmStatus sm_complex_dim(const struct SmComplex *k, size_t *out);

/**
 * # Safety
 * `k` must be a live complex handle and `out` a valid pointer.
 */
enum SmStatus sm_complex_num_vertices(const struct SmComplex *k, size_t *out);

/**
 * # Safety
 * `k` must be a live complex handle and `out` a valid pointer.
 */
enum SmStatus sm_complex_num_facets(const struct SmComplex *k, size_t *out);

/**
 * Pseudomanifold, orientability and sphere homology of the complex and its
 * vertex links down to `depth`; `*out` is true when all pass.
 *
 * # Safety
 * `k` must be a live complex handle and `out` a valid pointer.
 */
enum SmStatus sm_complex_sphere_evidence(const struct SmComplex *k, size_t depth, bool *out);

/**
 * Facet list, one facet per line; free with [`sm_string_free`].
 *
 * # Safety
 * `k` must be a live complex handle and `out` a valid pointer.
 */
enum SmStatus sm_complex_facets_text(const struct SmComplex *k, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SIMPLIMAP_H */
