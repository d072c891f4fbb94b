#ifndef ALTPOWER_H
#define ALTPOWER_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum AltGraphKind {
  ALT_GRAPH_KIND_POWER = 0,
  ALT_GRAPH_KIND_QUOTIENT = 1,
  ALT_GRAPH_KIND_POWER_TYPE = 2,
  ALT_GRAPH_KIND_ORDER = 3,
} AltGraphKind;

// Status codes returned by every fallible call.
typedef enum AltStatus {
  ALT_STATUS_OK = 0,
  ALT_STATUS_NULL_POINTER = 1,
  ALT_STATUS_INVALID_ARGUMENT = 2,
  ALT_STATUS_CAPACITY = 3,
  ALT_STATUS_PARSE = 4,
  ALT_STATUS_INTERNAL = 5,
  ALT_STATUS_PANIC = 6,
} AltStatus;

// Opaque graph handle.
typedef struct AltGraph AltGraph;

// Component counts for one degree. `row` is the zero-based table row for
// `n >= 11` and `-1` below that.
typedef struct AltCensusRow {
  uint64_t n;
  uint32_t c0_ptype;
  uint32_t c0_order;
  bool two_connected;
  int32_t row;
} AltCensusRow;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or null. The pointer
// stays valid until the next call into the library on the same thread.
const char *altpower_last_error(void);

// Library version as a static nul-terminated string.
const char *altpower_version(void);

// Builds a graph of the given kind for `A_n` under the default size limits.
//
// # Safety
// `out` must be a valid pointer to writable storage for one handle.
enum AltStatus altpower_graph_build(enum AltGraphKind kind, size_t n, struct AltGraph **out);

// Releases a graph. Null is accepted.
//
// # Safety
// `g` must be null or a handle from [`altpower_graph_build`] not yet freed.
void altpower_graph_free(struct AltGraph *g);

// # Safety
// `g` must be a live handle and `out` writable.
enum AltStatus altpower_graph_vertex_count(const struct AltGraph *g, size_t *out);

// # Safety
// `g` must be a live handle and `out` writable.
enum AltStatus altpower_graph_edge_count(const struct AltGraph *g, size_t *out);

// # Safety
// `g` must be a live handle and `out` writable.
enum AltStatus altpower_graph_component_count(const struct AltGraph *g, size_t *out);

// Text label of vertex `index`, in the same encoding as the JSON records.
// Free the result with [`altpower_string_free`].
//
// # Safety
// `g` must be a live handle and `out` writable.
enum AltStatus altpower_graph_vertex_label(const struct AltGraph *g, size_t index, char **out);

// Number of components of the quotient power graph as a decimal string,
// from the closed forms. Free the result with [`altpower_string_free`].
//
// # Safety
// `out` must be writable.
enum AltStatus altpower_closed_form_c0(size_t n, char **out);

// Small counts for degree `n` from the closed forms.
//
// # Safety
// `out` must be writable.
enum AltStatus altpower_census_row(size_t n, struct AltCensusRow *out);

// # Safety
// `out` must be writable.
enum AltStatus altpower_two_connected(uint64_t n, bool *out);

// Zero-based table row for `n >= 11`.
//
// # Safety
// `out` must be writable.
enum AltStatus altpower_classify_row(uint64_t n, int32_t *out);

// # Safety
// `out` must be writable.
enum AltStatus altpower_order_graph_components(uint64_t n, uint32_t *out);

// Whether `n` lies in `P ∪ (P+1) ∪ (P+2) ∪ 2P ∪ (2P+1)`.
bool altpower_in_set_a(uint64_t n);

// Releases a string returned by the library. Null is accepted.
//
// # Safety
// `s` must be null or a string returned by this library not yet freed.
void altpower_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ALTPOWER_H */
