#include "fraxis.h"

#include <cstring>
#include <new>
#include <string>

#include "fraxis/experiments.hpp"

struct fraxis_pauli_sum {
    fraxis::PauliSum value;
};

struct fraxis_graph {
    fraxis::Graph value;
};

struct fraxis_circuit {
    fraxis::Circuit value;
};

namespace {

thread_local std::string g_last_error;

fraxis_status fail(fraxis_status status, const char* what) {
    g_last_error = what ? what : "unknown error";
    return status;
}

/// Runs `body`, translating exceptions into status codes.
template <typename Body>
fraxis_status guarded(Body&& body) {
    try {
        body();
        return FRAXIS_OK;
    } catch (const fraxis::ParseError& err) {
        return fail(FRAXIS_ERR_PARSE, err.what());
    } catch (const std::invalid_argument& err) {
        return fail(FRAXIS_ERR_INVALID_ARGUMENT, err.what());
    } catch (const std::ios_base::failure& err) {
        return fail(FRAXIS_ERR_IO, err.what());
    } catch (const std::runtime_error& err) {
        // File-open failures surface as runtime errors with a path message.
        if (std::strstr(err.what(), "cannot open") || std::strstr(err.what(), "cannot write")) {
            return fail(FRAXIS_ERR_IO, err.what());
        }
        return fail(FRAXIS_ERR_INTERNAL, err.what());
    } catch (const std::exception& err) {
        return fail(FRAXIS_ERR_INTERNAL, err.what());
    }
}

fraxis_status require(bool condition, const char* what) {
    return condition ? FRAXIS_OK : fail(FRAXIS_ERR_INVALID_ARGUMENT, what);
}

char* copy_string(const std::string& text) {
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

}  // namespace

extern "C" {

const char* fraxis_version(void) {
    return "0.1.0";
}

const char* fraxis_last_error(void) {
    return g_last_error.c_str();
}

void fraxis_string_free(char* text) {
    delete[] text;
}

/* -- Pauli sums ----------------------------------------------------------- */

fraxis_status fraxis_pauli_sum_from_spec(const char* spec, fraxis_pauli_sum** out) {
    if (require(spec && out, "spec and out must be non-null") != FRAXIS_OK) {
        return FRAXIS_ERR_INVALID_ARGUMENT;
    }
    return guarded([&]() {
        *out = new fraxis_pauli_sum{fraxis::hamiltonian_from_spec(spec)};
    });
}

fraxis_status fraxis_pauli_sum_parse(const char* text, fraxis_pauli_sum** out) {
    if (require(text && out, "text and out must be non-null") != FRAXIS_OK) {
        return FRAXIS_ERR_INVALID_ARGUMENT;
    }
    return guarded([&]() { *out = new fraxis_pauli_sum{fraxis::parse_pauli_sum(text)}; });
}

fraxis_status fraxis_pauli_sum_load(const char* path, fraxis_pauli_sum** out) {
    if (require(path && out, "path and out must be non-null") != FRAXIS_OK) {
        return FRAXIS_ERR_INVALID_ARGUMENT;
    }
    return guarded([&]() { *out = new fraxis_pauli_sum{fraxis::load_pauli_sum(path)}; });
}

fraxis_status fraxis_pauli_sum_save(const fraxis_pauli_sum* sum, const char* path) {
    if (require(sum && path, "sum and path must be non-null") != FRAXIS_OK) {
        return FRAXIS_ERR_INVALID_ARGUMENT;
    }
    return guarded([&]() { fraxis::save_pauli_sum(sum->value, path); });
}

fraxis_status fraxis_pauli_sum_serialize(const fraxis_pauli_sum* sum, char** out_text) {
    if (require(sum && out_text, "sum and out_text must be non-null") != FRAXIS_OK) {
        return FRAXIS_ERR_INVALID_ARGUMENT;
    }
    return guarded([&]() { *out_text = copy_string(fraxis::serialize_pauli_sum(sum->value)); });
}

int fraxis_pauli_sum_num_qubits(const fraxis_pauli_sum* sum) {
    return sum ? sum->value.n_qubits() : 0;
}

size_t fraxis_pauli_sum_num_terms(const fraxis_pauli_sum* sum) {
    return sum ? sum->value.terms().size() : 0;
}

fraxis_status fraxis_pauli_sum_ground_energy(const fraxis_pauli_sum* sum, double* out_energy) {
    if (require(sum && out_energy, "sum and out_energy must be non-null") != FRAXIS_OK) {
        return FRAXIS_ERR_INVALID_ARGUMENT;
    }
    return guarded([&]() { *out_energy = fraxis::ground_energy(sum->value).energy; });
}

void fraxis_pauli_sum_free(fraxis_pauli_sum* sum) {
    delete sum;
}

/* -- Graphs --------------------------------------------------------------- */

fraxis_status fraxis_graph_petersen(fraxis_graph** out) {
    if (require(out != nullptr, "out must be non-null") != FRAXIS_OK) {
        return FRAXIS_ERR_INVALID_ARGUMENT;
    }
    return guarded([&]() { *out = new fraxis_graph{fraxis::Graph::petersen()}; });
}

fraxis_status fraxis_graph_load(const char* path, fraxis_graph** out) {
    if (require(path && out, "path and out must be non-null") != FRAXIS_OK) {
        return FRAXIS_ERR_INVALID_ARGUMENT;
    }
    return guarded([&]() { *out = new fraxis_graph{fraxis::load_graph(path)}; });
}

int fraxis_graph_num_vertices(const fraxis_graph* graph) {
    return graph ? graph->value.n_vertices : 0;
}

size_t fraxis_graph_num_edges(const fraxis_graph* graph) {
    return graph ? graph->value.edges.size() : 0;
}

fraxis_status fraxis_graph_max_cut(const fraxis_graph* graph, int* out_cut) {
    if (require(graph && out_cut, "graph and out_cut must be non-null") != FRAXIS_OK) {
        return FRAXIS_ERR_INVALID_ARGUMENT;
    }
    return guarded([&]() { *out_cut = fraxis::max_cut_brute_force(graph->value).best_cut; });
}

void fraxis_graph_free(fraxis_graph* graph) {
    delete graph;
}

/* -- Circuits ------------------------------------------------------------- */

fraxis_status fraxis_circuit_from_spec(const char* spec, fraxis_circuit** out) {
    if (require(spec && out, "spec and out must be non-null") != FRAXIS_OK) {
        return FRAXIS_ERR_INVALID_ARGUMENT;
    }
    return guarded([&]() { *out = new fraxis_circuit{fraxis::ansatz_from_spec(spec)}; });
}

fraxis_status fraxis_circuit_load(const char* path, fraxis_circuit** out) {
    if (require(path && out, "path and out must be non-null") != FRAXIS_OK) {
        return FRAXIS_ERR_INVALID_ARGUMENT;
    }
    return guarded([&]() { *out = new fraxis_circuit{fraxis::load_circuit(path)}; });
}

fraxis_status fraxis_circuit_save(const fraxis_circuit* circuit, const char* path) {
    if (require(circuit && path, "circuit and path must be non-null") != FRAXIS_OK) {
        return FRAXIS_ERR_INVALID_ARGUMENT;
    }
    return guarded([&]() { fraxis::save_circuit(circuit->value, path); });
}

fraxis_status fraxis_circuit_serialize(const fraxis_circuit* circuit, char** out_text) {
    if (require(circuit && out_text, "circuit and out_text must be non-null") != FRAXIS_OK) {
        return FRAXIS_ERR_INVALID_ARGUMENT;
    }
    return guarded([&]() { *out_text = copy_string(fraxis::serialize_circuit(circuit->value)); });
}

int fraxis_circuit_num_qubits(const fraxis_circuit* circuit) {
    return circuit ? circuit->value.n_qubits() : 0;
}

size_t fraxis_circuit_num_params(const fraxis_circuit* circuit) {
    return circuit ? circuit->value.param_slots().size() : 0;
}

fraxis_status fraxis_circuit_energy(const fraxis_circuit* circuit, const fraxis_pauli_sum* sum,
                                    double* out_energy) {
    if (require(circuit && sum && out_energy, "arguments must be non-null") != FRAXIS_OK) {
        return FRAXIS_ERR_INVALID_ARGUMENT;
    }
    return guarded([&]() { *out_energy = fraxis::energy(circuit->value, sum->value); });
}

void fraxis_circuit_free(fraxis_circuit* circuit) {
    delete circuit;
}

/* -- Experiment drivers ---------------------------------------------------- */

void fraxis_optimize_config_init(fraxis_optimize_config* config) {
    if (!config) {
        return;
    }
    config->hamiltonian = "two-qubit-model";
    config->ansatz = "fig3";
    config->method = "pi-fraxis";
    config->trials = 1;
    config->sweeps = 100;
    config->tol = 1e-8;
    config->theta = M_PI / 2.0;
    config->shots = 0;
    config->seed = 0;
    config->axis_init = "parameter";
    config->out_dir = "";
    config->threads = 0;
}

fraxis_status fraxis_run_optimize(const fraxis_optimize_config* config,
                                  fraxis_optimize_summary* out_summary) {
    if (require(config != nullptr, "config must be non-null") != FRAXIS_OK) {
        return FRAXIS_ERR_INVALID_ARGUMENT;
    }
    return guarded([&]() {
        fraxis::OptimizeConfig cxx;
        if (config->hamiltonian) cxx.hamiltonian = config->hamiltonian;
        if (config->ansatz) cxx.ansatz = config->ansatz;
        if (config->method) cxx.method = config->method;
        cxx.trials = config->trials;
        cxx.sweeps = config->sweeps;
        cxx.tol = config->tol;
        cxx.theta = config->theta;
        cxx.shots = config->shots;
        cxx.seed = config->seed;
        if (config->axis_init) cxx.axis_init = config->axis_init;
        if (config->out_dir) cxx.out_dir = config->out_dir;
        cxx.threads = config->threads;
        const fraxis::OptimizeResult result = fraxis::run_optimize(cxx);
        if (out_summary) {
            out_summary->mean_final = result.mean_final;
            out_summary->min_final = result.min_final;
            out_summary->median_final = result.median_final;
            out_summary->max_final = result.max_final;
            out_summary->ground_energy = result.ground;
            out_summary->has_ground_energy = result.has_ground_energy ? 1 : 0;
            out_summary->total_evaluations = result.total_evaluations;
        }
    });
}

void fraxis_expressibility_config_init(fraxis_expressibility_config* config) {
    if (!config) {
        return;
    }
    config->ansatz = "single-qubit";
    config->sampler = "fraxis-parameter";
    config->samples = 100000;
    config->bin_width = 0.001;
    config->seed = 0;
    config->out_dir = "";
    config->threads = 0;
}

fraxis_status fraxis_run_expressibility(const fraxis_expressibility_config* config,
                                        fraxis_expressibility_summary* out_summary) {
    if (require(config != nullptr, "config must be non-null") != FRAXIS_OK) {
        return FRAXIS_ERR_INVALID_ARGUMENT;
    }
    return guarded([&]() {
        fraxis::ExpressibilityConfig cxx;
        if (config->ansatz) cxx.ansatz = config->ansatz;
        if (config->sampler) cxx.sampler = config->sampler;
        cxx.samples = config->samples;
        cxx.bin_width = config->bin_width;
        cxx.seed = config->seed;
        if (config->out_dir) cxx.out_dir = config->out_dir;
        cxx.threads = config->threads;
        const fraxis::ExpressibilityResult result = fraxis::run_expressibility(cxx);
        if (out_summary) {
            out_summary->kl_divergence = result.report.kl_divergence;
            out_summary->samples = result.report.samples;
            out_summary->n_qubits = result.report.n_qubits;
        }
    });
}

void fraxis_maxcut_config_init(fraxis_maxcut_config* config) {
    if (!config) {
        return;
    }
    config->graph = "petersen";
    config->form = "qubo";
    config->method = "pi-fraxis";
    config->labels = "";
    config->trials = 20;
    config->sweeps = 3;
    config->theta = M_PI / 2.0;
    config->shots = 0;
    config->seed = 0;
    config->axis_init = "parameter";
    config->out_dir = "";
    config->threads = 0;
}

fraxis_status fraxis_run_maxcut(const fraxis_maxcut_config* config,
                                fraxis_maxcut_summary* out_summary) {
    if (require(config != nullptr, "config must be non-null") != FRAXIS_OK) {
        return FRAXIS_ERR_INVALID_ARGUMENT;
    }
    return guarded([&]() {
        fraxis::MaxCutConfig cxx;
        if (config->graph) cxx.graph = config->graph;
        if (config->form) cxx.form = config->form;
        if (config->method) cxx.method = config->method;
        if (config->labels) cxx.labels = config->labels;
        cxx.trials = config->trials;
        cxx.sweeps = config->sweeps;
        cxx.theta = config->theta;
        cxx.shots = config->shots;
        cxx.seed = config->seed;
        if (config->axis_init) cxx.axis_init = config->axis_init;
        if (config->out_dir) cxx.out_dir = config->out_dir;
        cxx.threads = config->threads;
        const fraxis::MaxCutRunResult result = fraxis::run_maxcut(cxx);
        if (out_summary) {
            out_summary->mean_final_expected = result.mean_final_expected;
            out_summary->best_final_expected = result.best_final_expected;
            out_summary->best_rounded_cut = result.best_rounded;
            out_summary->optimum_cut = result.optimum;
            out_summary->has_optimum = result.has_optimum ? 1 : 0;
            out_summary->relax_upper_bound = result.relax_upper;
        }
    });
}

fraxis_status fraxis_run_verify(const char* inject, int* out_failures) {
    return guarded([&]() {
        fraxis::VerifyOptions options;
        if (inject) {
            options.inject = inject;
        }
        const int failures = fraxis::run_verify(options);
        if (out_failures) {
            *out_failures = failures;
        }
    });
}

}  // extern "C"
