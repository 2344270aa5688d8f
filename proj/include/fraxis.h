/* C interface to the fraxis library.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Every fallible call returns a fraxis_status; on failure the handle output
 * is left untouched and fraxis_last_error() carries a thread-local message.
 * Strings returned through char** outputs are released with
 * fraxis_string_free().
 */
#ifndef FRAXIS_H
#define FRAXIS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fraxis_status {
    FRAXIS_OK = 0,
    FRAXIS_ERR_INVALID_ARGUMENT = 1,
    FRAXIS_ERR_PARSE = 2,
    FRAXIS_ERR_IO = 3,
    FRAXIS_ERR_INTERNAL = 4
} fraxis_status;

const char* fraxis_version(void);

/* Message describing the most recent failure on this thread. */
const char* fraxis_last_error(void);

void fraxis_string_free(char* text);

/* ----------------------------------------------------------------------- */
/* Pauli-sum Hamiltonians                                                   */

typedef struct fraxis_pauli_sum fraxis_pauli_sum;

/* Spec strings: "two-qubit-model", "heisenberg:n=5,J=1,h=1,periodic",
 * "file:<path>" or a bare path. */
fraxis_status fraxis_pauli_sum_from_spec(const char* spec, fraxis_pauli_sum** out);
fraxis_status fraxis_pauli_sum_parse(const char* text, fraxis_pauli_sum** out);
fraxis_status fraxis_pauli_sum_load(const char* path, fraxis_pauli_sum** out);
fraxis_status fraxis_pauli_sum_save(const fraxis_pauli_sum* sum, const char* path);
fraxis_status fraxis_pauli_sum_serialize(const fraxis_pauli_sum* sum, char** out_text);
int fraxis_pauli_sum_num_qubits(const fraxis_pauli_sum* sum);
size_t fraxis_pauli_sum_num_terms(const fraxis_pauli_sum* sum);

/* Minimum eigenvalue of the dense matrix; at most 10 qubits. */
fraxis_status fraxis_pauli_sum_ground_energy(const fraxis_pauli_sum* sum, double* out_energy);

void fraxis_pauli_sum_free(fraxis_pauli_sum* sum);

/* ----------------------------------------------------------------------- */
/* Graphs                                                                   */

typedef struct fraxis_graph fraxis_graph;

fraxis_status fraxis_graph_petersen(fraxis_graph** out);
fraxis_status fraxis_graph_load(const char* path, fraxis_graph** out);
int fraxis_graph_num_vertices(const fraxis_graph* graph);
size_t fraxis_graph_num_edges(const fraxis_graph* graph);

/* Exhaustive maximum cut; at most 24 vertices. */
fraxis_status fraxis_graph_max_cut(const fraxis_graph* graph, int* out_cut);

void fraxis_graph_free(fraxis_graph* graph);

/* ----------------------------------------------------------------------- */
/* Circuits                                                                 */

typedef struct fraxis_circuit fraxis_circuit;

/* Spec strings: "fig3", "circuit-a:L=3", "circuit-b:L=2", "qubo", "relax",
 * "single-qubit", "file:<path>" or a bare path. */
fraxis_status fraxis_circuit_from_spec(const char* spec, fraxis_circuit** out);
fraxis_status fraxis_circuit_load(const char* path, fraxis_circuit** out);
fraxis_status fraxis_circuit_save(const fraxis_circuit* circuit, const char* path);
fraxis_status fraxis_circuit_serialize(const fraxis_circuit* circuit, char** out_text);
int fraxis_circuit_num_qubits(const fraxis_circuit* circuit);
size_t fraxis_circuit_num_params(const fraxis_circuit* circuit);

/* Exact energy of the circuit state under the Hamiltonian. */
fraxis_status fraxis_circuit_energy(const fraxis_circuit* circuit, const fraxis_pauli_sum* sum,
                                    double* out_energy);

void fraxis_circuit_free(fraxis_circuit* circuit);

/* ----------------------------------------------------------------------- */
/* Experiment drivers                                                       */

typedef struct fraxis_optimize_config {
    const char* hamiltonian; /* Hamiltonian spec string */
    const char* ansatz;      /* ansatz spec string */
    const char* method;      /* rotosolve | rotoselect | pi-fraxis | theta-fraxis */
    int trials;
    int sweeps;
    double tol;          /* per-sweep improvement threshold; 0 disables */
    double theta;        /* fixed angle for theta-fraxis */
    uint64_t shots;      /* 0 = exact expectation */
    uint64_t seed;       /* trial i uses seed + i */
    const char* axis_init; /* parameter | state | y */
    const char* out_dir;   /* NULL or "" = no files */
    int threads;           /* 0 = FRAXIS_THREADS env or hardware */
} fraxis_optimize_config;

typedef struct fraxis_optimize_summary {
    double mean_final;
    double min_final;
    double median_final;
    double max_final;
    double ground_energy;
    int has_ground_energy;
    uint64_t total_evaluations;
} fraxis_optimize_summary;

void fraxis_optimize_config_init(fraxis_optimize_config* config);
fraxis_status fraxis_run_optimize(const fraxis_optimize_config* config,
                                  fraxis_optimize_summary* out_summary);

typedef struct fraxis_expressibility_config {
    const char* ansatz;
    const char* sampler; /* rotosolve | rotoselect | fraxis-parameter | fraxis-state */
    uint64_t samples;
    double bin_width;
    uint64_t seed;
    const char* out_dir;
    int threads;
} fraxis_expressibility_config;

typedef struct fraxis_expressibility_summary {
    double kl_divergence;
    uint64_t samples;
    int n_qubits;
} fraxis_expressibility_summary;

void fraxis_expressibility_config_init(fraxis_expressibility_config* config);
fraxis_status fraxis_run_expressibility(const fraxis_expressibility_config* config,
                                        fraxis_expressibility_summary* out_summary);

typedef struct fraxis_maxcut_config {
    const char* graph;  /* "petersen" or a graph file path */
    const char* form;   /* qubo | relax */
    const char* method;
    const char* labels; /* label file, relax on custom graphs */
    int trials;
    int sweeps;
    double theta;
    uint64_t shots;
    uint64_t seed;
    const char* axis_init;
    const char* out_dir;
    int threads;
} fraxis_maxcut_config;

typedef struct fraxis_maxcut_summary {
    double mean_final_expected;
    double best_final_expected;
    int best_rounded_cut; /* relax form; sign-rounding surrogate */
    int optimum_cut;
    int has_optimum;
    double relax_upper_bound;
} fraxis_maxcut_summary;

void fraxis_maxcut_config_init(fraxis_maxcut_config* config);
fraxis_status fraxis_run_maxcut(const fraxis_maxcut_config* config,
                                fraxis_maxcut_summary* out_summary);

/* Runs the property-check suites, printing one PASS/FAIL line per check to
 * stdout. `inject` perturbs the named check (testing hook) and may be NULL.
 * out_failures receives the number of failed checks. */
fraxis_status fraxis_run_verify(const char* inject, int* out_failures);

#ifdef __cplusplus
}
#endif

#endif /* FRAXIS_H */
