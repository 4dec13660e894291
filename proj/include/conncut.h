/* conncut C API: minimum cuts for graphs, hypergraphs, element and vertex
 * connectivity behind opaque handles. All results are returned as JSON
 * strings in the CLI schema; free them with conncut_free_string. Every
 * function is thread-safe on distinct handles. */

#ifndef CONNCUT_H
#define CONNCUT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct conncut_instance conncut_instance;

typedef enum {
    CONNCUT_OK = 0,
    CONNCUT_ERR_USAGE = 1,          /* bad arguments, malformed input */
    CONNCUT_ERR_SOLVE = 2,          /* solver precondition or limit failure */
    CONNCUT_ERR_ORACLE_MISMATCH = 3 /* --oracle cross-check disagreed */
} conncut_status;

typedef enum {
    CONNCUT_KIND_AUTO = 0,
    CONNCUT_KIND_GRAPH = 1,
    CONNCUT_KIND_HYPERGRAPH = 2,
    CONNCUT_KIND_ELEMENT = 3
} conncut_kind;

/* Parse an instance from text. precision scales decimal weights (use 1
 * for integral inputs). On failure returns a status != CONNCUT_OK and,
 * when errmsg is non-NULL, an explanation to free with
 * conncut_free_string. */
conncut_status conncut_parse(const char* text, size_t len, conncut_kind kind, uint64_t precision,
                             conncut_instance** out, char** errmsg);

void conncut_instance_free(conncut_instance* inst);

conncut_kind conncut_instance_kind(const conncut_instance* inst);

/* Load report (dropped singletons, merged parallels, ...), possibly
 * empty. Free with conncut_free_string. */
char* conncut_instance_report(const conncut_instance* inst);

typedef struct {
    uint64_t seed;
    double delta;             /* failure probability target, default 1e-3 */
    double epsilon;           /* vertex-cut approximation slack, default 0.1 */
    int exact;                /* vertex-cut: exact mode */
    int sparsify;             /* vertex-cut: Nagamochi-Ibaraki path */
    int oracle;               /* cross-check against brute force (small inputs) */
    int threads;              /* worker threads, default 1 */
    const uint64_t* terminals; /* vertex labels; NULL means the default set */
    size_t n_terminals;
} conncut_options;

/* Fill an options struct with the documented defaults. */
void conncut_options_init(conncut_options* opts);

/* Run a solver command: "edge-cut", "hyper-cut", "elem-cut",
 * "vertex-cut" or "isolate". json_out receives the result (also on
 * CONNCUT_ERR_ORACLE_MISMATCH). */
conncut_status conncut_solve(const conncut_instance* inst, const char* command,
                             const conncut_options* opts, char** json_out, char** errmsg);

/* Re-check an emitted certificate against its instance. valid_out is 1/0;
 * json_out receives the verify report. */
conncut_status conncut_verify(const conncut_instance* inst, const char* cert_json, int* valid_out,
                              char** json_out, char** errmsg);

void conncut_free_string(char* s);

const char* conncut_version(void);
const char* conncut_schema_version(void);

#ifdef __cplusplus
}
#endif

#endif /* CONNCUT_H */
