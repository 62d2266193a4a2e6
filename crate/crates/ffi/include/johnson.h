#ifndef JOHNSON_H
#define JOHNSON_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum JgStatus {
  JG_STATUS_OK = 0,
  JG_STATUS_NULL_POINTER = 1,
  JG_STATUS_INVALID_PARAMS = 2,
  JG_STATUS_RANGE = 3,
  JG_STATUS_INVALID_LABEL = 4,
  JG_STATUS_OVERFLOW = 5,
  JG_STATUS_NOT_A_CLIQUE = 6,
  JG_STATUS_REGIME = 7,
  JG_STATUS_CAP_EXCEEDED = 8,
  JG_STATUS_CONSISTENCY = 9,
  JG_STATUS_IO = 10,
  JG_STATUS_BUFFER_TOO_SMALL = 11,
  JG_STATUS_PANIC = 12,
} JgStatus;

/**
 * Which closed-form family to enumerate.
 */
typedef enum JgFamily {
  JG_FAMILY_MIN = 0,
  JG_FAMILY_MAX = 1,
  JG_FAMILY_ALL = 2,
} JgFamily;

typedef enum JgCliqueClass {
  JG_CLIQUE_CLASS_MIN = 0,
  JG_CLIQUE_CLASS_MAX = 1,
} JgCliqueClass;

/**
 * Opaque list of maximal cliques.
 */
typedef struct JgCliqueList JgCliqueList;

/**
 * Opaque graph handle.
 */
typedef struct JgGraph JgGraph;

/**
 * One entry of a clique list. `set` is borrowed from the list and stays
 * valid until the list is freed.
 */
typedef struct JgCliqueInfo {
  enum JgCliqueClass kind;
  uint64_t size;
  const uint32_t *set;
  size_t set_len;
} JgCliqueInfo;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until
 * the next call into this library from the same thread.
 */
const char *jg_last_error(void);

enum JgStatus jg_binomial(uint64_t n, uint64_t k, uint64_t *out);

/**
 * Creates a handle for J_n(m, m-1). Requires m >= 2 and n >= m + 1.
 */
enum JgStatus jg_graph_new(uint32_t n, uint32_t m, struct JgGraph **out);

void jg_graph_free(struct JgGraph *g);

/**
 * True when n = m + 1, where the graph is complete.
 */
enum JgStatus jg_graph_is_degenerate(const struct JgGraph *g, bool *out);

enum JgStatus jg_graph_vertex_count(const struct JgGraph *g, uint64_t *out);

enum JgStatus jg_graph_edge_count(const struct JgGraph *g, uint64_t *out);

enum JgStatus jg_graph_degree(const struct JgGraph *g, uint64_t *out);

enum JgStatus jg_clique_number(const struct JgGraph *g, uint64_t *out);

enum JgStatus jg_clique_partition_number(const struct JgGraph *g, uint64_t *out);

/**
 * Colex rank of the m-subset `label_ptr[0..len]`.
 */
enum JgStatus jg_rank(const struct JgGraph *g,
                      const uint32_t *label_ptr,
                      size_t len,
                      uint64_t *out);

/**
 * Writes the m elements of the vertex with colex rank `r` into `out`,
 * which must hold at least `cap` >= m entries.
 */
enum JgStatus jg_unrank(const struct JgGraph *g, uint64_t r, uint32_t *out, size_t cap);

enum JgStatus jg_are_adjacent(const struct JgGraph *g,
                              const uint32_t *u,
                              size_t u_len,
                              const uint32_t *v,
                              size_t v_len,
                              bool *out);

/**
 * Enumerates a closed-form family of maximal cliques in colex order of
 * their defining sets. `JgFamily::Max` fails with `Regime` when n = m + 1.
 */
enum JgStatus jg_cliques(const struct JgGraph *g, enum JgFamily family, struct JgCliqueList **out);

/**
 * Maximal cliques containing the clique given as `count` labels of m
 * elements each, packed into `labels`.
 */
enum JgStatus jg_extend(const struct JgGraph *g,
                        const uint32_t *labels,
                        size_t count,
                        struct JgCliqueList **out);

/**
 * A minimum clique partition of the edge set.
 */
enum JgStatus jg_partition(const struct JgGraph *g, struct JgCliqueList **out);

size_t jg_clique_list_len(const struct JgCliqueList *list);

enum JgStatus jg_clique_list_get(const struct JgCliqueList *list,
                                 size_t index,
                                 struct JgCliqueInfo *out);

void jg_clique_list_free(struct JgCliqueList *list);

/**
 * Runs the brute-force verification and returns its report as a JSON
 * line. `max_vertices` of 0 uses the default cap. Free with `jg_string_free`.
 */
enum JgStatus jg_verify_json(const struct JgGraph *g, uint64_t max_vertices, char **out);

void jg_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* JOHNSON_H */
