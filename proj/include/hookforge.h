/* hookforge: exact verification of hook-statistic and majorization
 * inequalities on Young diagrams, rooted trees, solid partitions and
 * lower ideals in products of rooted trees.
 *
 * Every query returns a status code; results travel as JSON text with
 * all exact values rendered as decimal strings. Handles and returned
 * strings are owned by the caller and released with hf_object_free /
 * hf_string_free. On failure, hf_last_error() describes the problem
 * (per thread, valid until the next failing call on that thread).
 */
#ifndef HOOKFORGE_H
#define HOOKFORGE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hf_status {
    HF_OK = 0,
    HF_ERR_PARSE = 1,        /* malformed input text or JSON */
    HF_ERR_INVALID = 2,      /* well-formed input violating an invariant */
    HF_ERR_PRECONDITION = 3, /* operation called outside its contract */
    HF_ERR_LIMIT = 4,        /* configured size limit exceeded */
    HF_ERR_ARGUMENT = 5,     /* unknown kind/theorem, null pointer, ... */
    HF_ERR_INTERNAL = 6
} hf_status;

/* Opaque combinatorial object: a partition, rooted tree, solid
 * partition, finite poset, or tree-product ideal. */
typedef struct hf_object hf_object;

/* Constructors. Formats:
 *   partition: "4,3,1" or a JSON array of integers ("" is empty)
 *   tree:      parent array, 0 for the root: "0,1,1,1,2,3,5,5"
 *   solid:     JSON [[i,j,k],...], {"cubes":[...]} or {"matrix":[[...],...]}
 *   poset:     first line n, then "a < b" cover lines
 *   ideal:     {"factors":[[...]], "elements":[[...]], "weight":[[[m],v],...]}
 */
hf_status hf_partition_parse(const char* text, hf_object** out);
hf_status hf_tree_parse(const char* text, hf_object** out);
hf_status hf_solid_parse(const char* text, hf_object** out);
hf_status hf_poset_parse(const char* text, hf_object** out);
hf_status hf_ideal_parse(const char* text, hf_object** out);
void hf_object_free(hf_object* object);

const char* hf_object_type(const hf_object* object); /* "partition", ... */
long long hf_object_size(const hf_object* object);

/* Per-object statistic tables and multisets. kind: a diagram statistic
 * (hook, anti-hook, semi-hook, arm, leg, anti-arm, anti-leg, area,
 * anti-area, weighted), "branch"/"distance" for trees, "R"/"Q"/"V" for
 * solids, "upper-ideal" for posets, "H" for ideals. weight may be NULL
 * except for kind "weighted" (diagram) and for ideals without an
 * embedded weight; it is "ones", "axes", "faces" (ideals) or a JSON
 * table. */
hf_status hf_stats(const hf_object* object, const char* kind, const char* weight,
                   char** json_out);

/* Tableau / increasing-labeling / linear-extension counts with a
 * brute-force cross-check when feasible. The HOOKFORGE_LIMIT
 * environment variable overrides the default exact-count limit of 20
 * elements. */
hf_status hf_count(const hf_object* object, char** json_out);

/* Corner-ward shuffle of a subset (JSON: [[i,j],...] cells, [v,...]
 * vertices, [[i,j,k],...] cubes, [[v1..vd],...] elements) with the full
 * stage trace and inequality checks. weight as in hf_stats, ideals only. */
hf_status hf_shuffle(const hf_object* object, const char* subset_json,
                     const char* weight, char** json_out);

/* The two linear-extension lower bounds of a solid partition plus the
 * exact count when small enough. */
hf_status hf_bounds(const hf_object* object, char** json_out);

typedef struct hf_sweep_options {
    int max_n;     /* <= 0: per-theorem default */
    int trials;    /* <= 0: per-theorem default */
    uint64_t seed; /* streams are identical across platforms per seed */
    int jobs;      /* <= 0: 1 */
} hf_sweep_options;

/* Run one verification sweep ("all" for every registered one). Writes 1
 * to *counterexample_found when any check failed, else 0; the JSON
 * report carries the instances, failures and notes. */
hf_status hf_verify(const char* theorem, const hf_sweep_options* options,
                    char** json_out, int* counterexample_found);

/* Comma-separated registered sweep identifiers. Static storage. */
const char* hf_theorem_list(void);

void hf_string_free(char* text);
const char* hf_last_error(void);
const char* hf_version(void);

#ifdef __cplusplus
}
#endif

#endif
