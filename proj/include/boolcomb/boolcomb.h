#ifndef BOOLCOMB_H
#define BOOLCOMB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define BC_API __declspec(dllexport)
#else
#define BC_API __attribute__((visibility("default")))
#endif

typedef enum bc_status {
    BC_OK = 0,
    BC_ERR_MISMATCHED_VERTEX_COUNT,
    BC_ERR_EMPTY_INPUT,
    BC_ERR_ARITY_MISMATCH,
    BC_ERR_OUT_OF_RANGE_VERTEX,
    BC_ERR_DUPLICATE_VERTEX,
    BC_ERR_SIZE_LIMIT_EXCEEDED,
    BC_ERR_INVALID_PARTITION,
    BC_ERR_OUT_OF_RANGE_VARIABLE,
    BC_ERR_NOT_MONOTONE,
    BC_ERR_NOT_A_PERMUTATION,
    BC_ERR_UNSUPPORTED_TAG,
    BC_ERR_BUDGET_EXCEEDED,
    BC_ERR_NO_BIG_TWIN_CLASS,
    BC_ERR_NOT_INTERSECTION_CLOSED,
    BC_ERR_NOT_EQUIVALENCE_GRAPH,
    BC_ERR_UNSUPPORTED_EXPRESSION,
    BC_ERR_UNKNOWN_THEOREM,
    BC_ERR_SCHEME_REJECTS_GRAPH,
    BC_ERR_MALFORMED_LABEL,
    BC_ERR_MALFORMED_INPUT,
    BC_ERR_CERTIFICATION_FAILED,
    BC_ERR_INVALID_ARGUMENT = 100,
    BC_ERR_OUT_OF_MEMORY,
    BC_ERR_INTERNAL
} bc_status;

typedef enum bc_format { BC_FORMAT_AUTO, BC_FORMAT_GRAPH6, BC_FORMAT_EDGE_LIST } bc_format;
typedef enum bc_op { BC_OP_UNION, BC_OP_INTERSECT, BC_OP_XOR } bc_op;

typedef struct bc_graph bc_graph;

/* Strings returned through char** are owned by the caller; release with bc_string_free. */
BC_API const char* bc_status_name(bc_status status);
/* Message of the last failing call on this thread, or "" after a success. */
BC_API const char* bc_last_error_message(void);
BC_API void bc_string_free(char* s);

BC_API bc_status bc_graph_parse(const char* text, bc_format format, bc_graph** out);
BC_API bc_status bc_graph_emit(const bc_graph* g, bc_format format, char** out);
BC_API void bc_graph_free(bc_graph* g);
BC_API size_t bc_graph_order(const bc_graph* g);
BC_API size_t bc_graph_edge_count(const bc_graph* g);
BC_API bc_status bc_graph_adjacent(const bc_graph* g, size_t u, size_t v, int* out);
BC_API bc_status bc_graph_equal(const bc_graph* a, const bc_graph* b, int* out);
BC_API bc_status bc_graph_isomorphic(const bc_graph* a, const bc_graph* b, int* out);

BC_API bc_status bc_combine(bc_op op, const bc_graph* const* graphs, size_t count, bc_graph** out);
/* fn is "<arity>:0x<hex>"; arity must equal count. */
BC_API bc_status bc_apply_function(const char* fn, const bc_graph* const* graphs, size_t count, bc_graph** out);
BC_API bc_status bc_complement(const bc_graph* g, bc_graph** out);

BC_API bc_status bc_is_member(const char* class_tag, const bc_graph* g, int* out);
/* JSON array of graph6 strings for every labeled member on n vertices. */
BC_API bc_status bc_enumerate_json(const char* class_tag, size_t n, char** out);

BC_API bc_status bc_params_json(const bc_graph* g, char** out);

/* method: vizing | twin | classL | xornf | pcseq. vizing/twin/classL take one graph;
   xornf needs fn and class_tag; pcseq takes equivalence graphs. Unused arguments may be NULL. */
BC_API bc_status bc_decompose_json(const char* method, const bc_graph* const* graphs, size_t count, const char* fn,
                                   const char* class_tag, char** out);

BC_API bc_status bc_hnk(size_t n, size_t k, bc_graph** out);
BC_API bc_status bc_hnk_report_json(size_t n, size_t k, char** out);

/* id is a catalogue key or "all" (JSON array). all_passed may be NULL. */
BC_API bc_status bc_verify_json(const char* id, uint64_t seed, char** out, int* all_passed);
BC_API bc_status bc_chi_binding_json(const char* expr, const char* binding, size_t samples, size_t n, uint64_t seed,
                                     char** out, int* passed);
BC_API bc_status bc_reverify_counterexample(const char* json, int* out);

/* mode: any | union | intersect | xor. BOOLCOMB_BUDGET overrides the search budget. */
BC_API bc_status bc_booldim_json(const bc_graph* target, const char* class_tag, size_t k_max, const char* mode,
                                 char** out);

/* Composed labels over equivalence bases. */
BC_API bc_status bc_label_json(const char* fn, const bc_graph* const* graphs, size_t count, char** out);
BC_API bc_status bc_label_decode(const char* fn, size_t n, const char* hex_a, const char* hex_b, int* out);

#ifdef __cplusplus
}
#endif

#endif
