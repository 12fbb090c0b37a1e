#ifndef HAMGRAPH_H
#define HAMGRAPH_H

#include <stddef.h>

#if defined(__GNUC__)
#define HG_API __attribute__((visibility("default")))
#else
#define HG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hg_graph hg_graph;
typedef struct hg_polygon hg_polygon;

typedef enum {
    HG_OK = 0,
    HG_EDOMAIN = 1,   /* input is well formed but the operation does not apply */
    HG_EPARSE = 2,    /* malformed JSON or rational */
    HG_EARG = 3,      /* bad argument (null pointer, unknown option value) */
    HG_EINTERNAL = 4
} hg_status;

/* Details of the last failure on the calling thread. */
HG_API const char* hg_last_error(void);
HG_API const char* hg_last_error_code(void);

/* Every char* handed out by this library must be released here. */
HG_API void hg_string_free(char* s);

HG_API hg_status hg_graph_from_json(const char* json, hg_graph** out);
HG_API hg_status hg_graph_to_json(const hg_graph* g, char** out);
HG_API void hg_graph_free(hg_graph* g);

HG_API hg_status hg_polygon_from_json(const char* json, hg_polygon** out);
HG_API hg_status hg_polygon_to_json(const hg_polygon* p, char** out);
HG_API void hg_polygon_free(hg_polygon* p);

/* {"valid": bool, "violations": [{"rule","ids","message"}]} */
HG_API hg_status hg_graph_validate(const hg_graph* g, char** report);
HG_API hg_status hg_polygon_validate(const hg_polygon* p, char** report);

/* mode: 0 exact, 1 up to a common shift of the moment labels */
HG_API hg_status hg_graph_canonical(const hg_graph* g, int mode, char** out);
HG_API hg_status hg_graph_isomorphic(const hg_graph* a, const hg_graph* b, int mode, int* result);
HG_API hg_status hg_graph_weights(const hg_graph* g, char** out);
HG_API hg_status hg_graph_extend(const hg_graph* g, char** out);

HG_API hg_status hg_graph_density(const hg_graph* g, char** out);
HG_API hg_status hg_polygon_density(const hg_polygon* p, char** out);

HG_API hg_status hg_polygon_to_graph(const hg_polygon* p, hg_graph** out);
HG_API hg_status hg_graph_to_polygon(const hg_graph* g, hg_polygon** out);
HG_API hg_status hg_polygon_normal_form(const hg_polygon* p, hg_polygon** out);
HG_API hg_status hg_polygon_equivalent(const hg_polygon* a, const hg_polygon* b, int* result);
HG_API hg_status hg_polygon_fan(const hg_polygon* p, char** out);

/* Sites with their maximal sizes. */
HG_API hg_status hg_blowup_sites(const hg_graph* g, char** out);
HG_API hg_status hg_blowup(const hg_graph* g, const char* vertex, const char* lambda, hg_graph** out);
HG_API hg_status hg_blowdown_sites(const hg_graph* g, char** out);
HG_API hg_status hg_blowdown(const hg_graph* g, size_t site_index, hg_graph** out);
/* {"minimal": graph, "steps": [...], "recognized": bool} */
HG_API hg_status hg_reduce(const hg_graph* g, char** out);

/* family string such as "cp2:1,2" or "ruled:0,1,1,1" */
HG_API hg_status hg_minimal_graph(const char* family, hg_graph** out);
/* grid: comma separated fractions of the maximal size, or NULL for 1/2 */
HG_API hg_status hg_enumerate(const char* const* seeds, size_t n_seeds, int max_blowups, const char* grid, char** out);

HG_API hg_status hg_classify(const hg_graph* g, char** out);
HG_API hg_status hg_homology(const hg_graph* g, char** out);

/* kind: "graph", "polygon" or "density"; format: "svg" or "dot" (graphs only) */
HG_API hg_status hg_render(const char* kind, const char* json, const char* format, char** out);

#ifdef __cplusplus
}
#endif

#endif
