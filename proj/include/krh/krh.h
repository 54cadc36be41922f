#ifndef KRH_KRH_H
#define KRH_KRH_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define KRH_API __attribute__((visibility("default")))
#else
#define KRH_API
#endif

typedef enum krh_status {
  KRH_OK = 0,
  KRH_NOT_DIVISIBLE,
  KRH_INHOMOGENEOUS_BINDING,
  KRH_LEVEL_MISMATCH,
  KRH_DEGREE_VIOLATION,
  KRH_NOT_EXCLUDABLE,
  KRH_POTENTIAL_NONZERO,
  KRH_AMBIENT_MISMATCH,
  KRH_IMAGE_NOT_COCYCLE,
  KRH_UNKNOWN_VARIABLE,
  KRH_INVALID_GRAPH,
  KRH_UNKNOWN_NAME,
  KRH_INVALID_DIAGRAM,
  KRH_INCONSISTENT_ORIENTATION,
  KRH_PARSE_ERROR,
  KRH_GENERATOR_OUT_OF_RANGE,
  KRH_IRREDUCIBLE_GRAPH,
  KRH_RECURSION_DEPTH_EXCEEDED,
  KRH_INTERNAL,
  KRH_INVALID_ARGUMENT
} krh_status;

typedef struct krh_diagram krh_diagram;
typedef struct krh_table krh_table;

KRH_API const char* krh_status_name(krh_status s);
/* message of the last failure on the calling thread ("" if none) */
KRH_API const char* krh_last_error(void);
/* strings returned through char** out parameters are released with this */
KRH_API void krh_string_free(char* s);

/* PD[X[..],..] (optionally "loops=k") or braid:<strands>:[..] */
KRH_API krh_status krh_diagram_parse(const char* text, krh_diagram** out);
KRH_API void krh_diagram_free(krh_diagram* d);
KRH_API int krh_diagram_crossings(const krh_diagram* d);
KRH_API int krh_diagram_components(const krh_diagram* d);
KRH_API int krh_diagram_writhe(const krh_diagram* d);

/* reduced_component < 0 computes the unreduced homology */
KRH_API krh_status krh_homology(const krh_diagram* d, int n, int reduced_component, int jobs, krh_table** out);
KRH_API void krh_table_free(krh_table* t);
KRH_API int krh_table_n(const krh_table* t);
KRH_API int krh_table_parity(const krh_table* t);
KRH_API size_t krh_table_size(const krh_table* t);
/* entries sorted by (i, j) */
KRH_API krh_status krh_table_entry(const krh_table* t, size_t index, int* i, int* j, long* dim);
KRH_API krh_status krh_table_json(const krh_table* t, char** out);
KRH_API krh_status krh_table_euler(const krh_table* t, char** out);

/* P_n from the skein recursion, as "q^3+q+q^-1+q^-3" */
KRH_API krh_status krh_polynomial(const krh_diagram* d, int n, char** out);
/* graded dimension of H(graph) and, for closed graphs, the MOY value (else NULL) */
KRH_API krh_status krh_graph_eval(const char* graph, int n, char** gdim, char** moy);

typedef struct krh_invocation {
  const char* subcommand; /* homology, graph-eval, polynomial, check */
  int n;
  const char* input;
  int reduced_component; /* < 0: off */
  int json;
  int jobs;
} krh_invocation;

/* runs one command; returns the process exit code */
KRH_API int krh_run(const krh_invocation* inv, char** out, char** err);

#ifdef __cplusplus
}
#endif

#endif
