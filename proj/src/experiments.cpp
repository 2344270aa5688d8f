#include "fraxis/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "fraxis/rng.hpp"

namespace fraxis {

namespace {

using nlohmann::json;

std::pair<std::string, std::string> split_head(const std::string& spec) {
    const std::size_t colon = spec.find(':');
    if (colon == std::string::npos) {
        return {spec, ""};
    }
    return {spec.substr(0, colon), spec.substr(colon + 1)};
}

// Parses "k1=v1,k2=v2,flag" option lists.
std::vector<std::pair<std::string, std::string>> parse_options(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> options;
    std::istringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty()) {
            continue;
        }
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos) {
            options.emplace_back(item, "");
        } else {
            options.emplace_back(item.substr(0, eq), item.substr(eq + 1));
        }
    }
    return options;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write file: " + path.string());
    }
    out << text;
}

void parallel_for(int count, int threads, const std::function<void(int)>& body) {
    if (count <= 0) {
        return;
    }
    const int workers = std::max(1, std::min(threads, count));
    if (workers == 1) {
        for (int i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<int> cursor{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                const int i = cursor.fetch_add(1);
                if (i >= count) {
                    return;
                }
                body(i);
            }
        });
    }
    for (std::thread& t : pool) {
        t.join();
    }
}

double quantile(const std::vector<double>& sorted, double p) {
    if (sorted.empty()) {
        return 0.0;
    }
    const double position = p * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(position);
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = position - static_cast<double>(lo);
    return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

PauliSum negated(const PauliSum& m) {
    PauliSum out(m.n_qubits());
    for (const PauliTerm& term : m.terms()) {
        out.add_term(-term.coeff, term.ops);
    }
    out.normalize();
    return out;
}

// Ring-entangled cut ansatz generalized over qubit count; the 10-qubit QUBO
// and 4-qubit relaxation builders are the two shipped instances.
Circuit ring_ansatz(int n_qubits, EntanglerKind kind, bool hadamard_prelude,
                    bool leading_params) {
    Circuit c(n_qubits);
    if (hadamard_prelude) {
        for (int q = 0; q < n_qubits; ++q) {
            c.add_fixed(q, FixedGate::H);
        }
    }
    if (leading_params) {
        for (int q = 0; q < n_qubits; ++q) {
            c.add_param(q);
        }
    }
    if (n_qubits == 2) {
        c.add_entangler(kind, 0, 1);
    } else if (n_qubits > 2) {
        for (int q = 0; q < n_qubits; ++q) {
            c.add_entangler(kind, q, (q + 1) % n_qubits);
        }
    }
    for (int q = 0; q < n_qubits; ++q) {
        c.add_param(q);
    }
    return c;
}

}  // namespace

PauliSum hamiltonian_from_spec(const std::string& spec) {
    const auto [head, options] = split_head(spec);
    if (head == "two-qubit-model") {
        return two_qubit_model();
    }
    if (head == "heisenberg") {
        int n = 5;
        double coupling = 1.0;
        double field = 1.0;
        bool periodic = true;
        for (const auto& [key, value] : parse_options(options)) {
            if (key == "n") n = std::stoi(value);
            else if (key == "J") coupling = std::stod(value);
            else if (key == "h") field = std::stod(value);
            else if (key == "periodic") periodic = true;
            else if (key == "open") periodic = false;
            else throw std::invalid_argument("unknown heisenberg option: " + key);
        }
        return heisenberg_1d(n, coupling, field, periodic);
    }
    if (head == "file") {
        return load_pauli_sum(options);
    }
    if (std::filesystem::exists(spec)) {
        return load_pauli_sum(spec);
    }
    throw std::invalid_argument("unknown Hamiltonian spec: " + spec);
}

Circuit ansatz_from_spec(const std::string& spec) {
    const auto [head, options] = split_head(spec);
    auto layers_of = [&](const std::string& text) {
        int layers = 1;
        for (const auto& [key, value] : parse_options(text)) {
            if (key == "L" || key == "layers") layers = std::stoi(value);
            else throw std::invalid_argument("unknown ansatz option: " + key);
        }
        return layers;
    };
    if (head == "fig3" || head == "two-qubit") {
        return two_qubit_ansatz();
    }
    if (head == "circuit-a") {
        return circuit_a(layers_of(options));
    }
    if (head == "circuit-b") {
        return circuit_b(layers_of(options));
    }
    if (head == "qubo") {
        return qubo_ansatz();
    }
    if (head == "relax") {
        return relax_ansatz();
    }
    if (head == "single-qubit" || head == "1q") {
        return single_qubit_ansatz();
    }
    if (head == "file") {
        return load_circuit(options);
    }
    if (std::filesystem::exists(spec)) {
        return load_circuit(spec);
    }
    throw std::invalid_argument("unknown ansatz spec: " + spec);
}

int resolve_threads(int requested) {
    if (requested > 0) {
        return requested;
    }
    if (const char* env = std::getenv("FRAXIS_THREADS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) {
            return parsed;
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void initialize_parameters(Circuit& c, const std::string& axis_init, Rng& rng) {
    for (std::size_t slot : c.param_slots()) {
        ParamGate& param = c.param_at(slot);
        if (axis_init == "parameter") {
            const double polar = rng.uniform(0.0, M_PI);
            const double azimuth = rng.uniform(-M_PI, M_PI);
            param.axis = Axis{std::sin(polar) * std::cos(azimuth),
                              std::sin(polar) * std::sin(azimuth), std::cos(polar)};
        } else if (axis_init == "state") {
            param.axis = Axis::normalized(rng.normal(), rng.normal(), rng.normal());
        } else if (axis_init == "y") {
            param.axis = Axis{0.0, 1.0, 0.0};
        } else {
            throw std::invalid_argument("unknown axis init: " + axis_init);
        }
        param.theta = rng.angle();
    }
}

OptimizeResult run_optimize(const OptimizeConfig& config) {
    if (config.trials < 0 || config.sweeps < 0) {
        throw std::invalid_argument("trials and sweeps must be non-negative");
    }
    const PauliSum hamiltonian = hamiltonian_from_spec(config.hamiltonian);
    const Circuit ansatz = ansatz_from_spec(config.ansatz);
    if (hamiltonian.n_qubits() != ansatz.n_qubits()) {
        throw std::invalid_argument("Hamiltonian and ansatz qubit counts differ");
    }
    const Method method = method_from_name(config.method);

    OptimizeResult result;
    result.param_slots = ansatz.param_slots().size();
    result.trials.resize(config.trials);

    parallel_for(config.trials, resolve_threads(config.threads), [&](int i) {
        const std::uint64_t trial_seed = config.seed + static_cast<std::uint64_t>(i);
        Circuit circuit = ansatz;
        Rng rng(trial_seed);
        initialize_parameters(circuit, config.axis_init, rng);
        EnergyEvaluator eval = config.shots == 0
                                   ? EnergyEvaluator::exact()
                                   : EnergyEvaluator::with_shots(config.shots, trial_seed);
        SweepOptions options;
        options.method = method;
        options.theta = config.theta;
        options.max_sweeps = config.sweeps;
        options.tol = config.tol;
        Trajectory trajectory = sweep(circuit, hamiltonian, options, eval);

        TrialResult& trial = result.trials[i];
        trial.seed = trial_seed;
        trial.final_energy = trajectory.final_energy;
        trial.evaluations = trajectory.total_evaluations;
        trial.sweeps_executed = trajectory.sweeps_executed;
        trial.status = trajectory.status;
        trial.trajectory = std::move(trajectory);
    });

    std::vector<double> finals;
    for (const TrialResult& trial : result.trials) {
        finals.push_back(trial.final_energy);
        result.total_evaluations += trial.evaluations;
    }
    std::sort(finals.begin(), finals.end());
    if (!finals.empty()) {
        double sum = 0.0;
        for (double e : finals) sum += e;
        result.mean_final = sum / static_cast<double>(finals.size());
        result.min_final = finals.front();
        result.max_final = finals.back();
        result.q25_final = quantile(finals, 0.25);
        result.median_final = quantile(finals, 0.5);
        result.q75_final = quantile(finals, 0.75);
    }
    if (hamiltonian.n_qubits() <= 10) {
        result.has_ground_energy = true;
        result.ground = ground_energy(hamiltonian).energy;
    }

    if (!config.out_dir.empty()) {
        const std::filesystem::path dir(config.out_dir);
        std::filesystem::create_directories(dir);
        char name[64];
        for (int i = 0; i < config.trials; ++i) {
            std::snprintf(name, sizeof(name), "trial_%04d.csv", i);
            write_text_file(dir / name, trajectory_csv(result.trials[i].trajectory));
        }
        json summary;
        summary["config"] = {{"hamiltonian", config.hamiltonian}, {"ansatz", config.ansatz},
                             {"method", config.method},           {"trials", config.trials},
                             {"sweeps", config.sweeps},           {"tol", config.tol},
                             {"theta", config.theta},             {"shots", config.shots},
                             {"seed", config.seed},               {"axis_init", config.axis_init}};
        summary["param_slots"] = result.param_slots;
        summary["evaluations_per_update"] = evaluations_per_update(method);
        summary["total_evaluations"] = result.total_evaluations;
        json finals_json = json::array();
        json statuses = json::array();
        for (const TrialResult& trial : result.trials) {
            finals_json.push_back(trial.final_energy);
            statuses.push_back(trial.status);
        }
        summary["final_energies"] = finals_json;
        summary["statuses"] = statuses;
        summary["mean_final"] = result.mean_final;
        summary["quantiles"] = {{"min", result.min_final},    {"q25", result.q25_final},
                                {"median", result.median_final}, {"q75", result.q75_final},
                                {"max", result.max_final}};
        if (result.has_ground_energy) {
            summary["ground_energy"] = result.ground;
        }
        write_text_file(dir / "summary.json", summary.dump(2) + "\n");
    }
    return result;
}

ExpressibilityResult run_expressibility(const ExpressibilityConfig& config) {
    const Circuit ansatz = ansatz_from_spec(config.ansatz);
    const Sampler sampler = sampler_from_name(config.sampler);
    ExpressibilityResult result;
    result.histogram = sample_fidelities(ansatz, sampler, config.samples, config.seed,
                                         config.bin_width, resolve_threads(config.threads));
    const std::uint64_t dim = std::uint64_t{1} << ansatz.n_qubits();
    result.report.kl_divergence = kl_divergence(result.histogram, dim);
    result.report.ansatz = config.ansatz;
    result.report.sampler = config.sampler;
    result.report.n_qubits = ansatz.n_qubits();
    result.report.samples = config.samples;
    result.report.bin_width = config.bin_width;

    if (!config.out_dir.empty()) {
        const std::filesystem::path dir(config.out_dir);
        std::filesystem::create_directories(dir);
        write_text_file(dir / "histogram.csv", histogram_csv(result.histogram));
        json report;
        report["kl_divergence"] = result.report.kl_divergence;
        report["ansatz"] = result.report.ansatz;
        report["sampler"] = result.report.sampler;
        report["n_qubits"] = result.report.n_qubits;
        report["samples"] = result.report.samples;
        report["bin_width"] = result.report.bin_width;
        report["seed"] = config.seed;
        write_text_file(dir / "report.json", report.dump(2) + "\n");
    }
    return result;
}

MaxCutRunResult run_maxcut(const MaxCutConfig& config) {
    if (config.trials < 0 || config.sweeps < 0) {
        throw std::invalid_argument("trials and sweeps must be non-negative");
    }
    const bool builtin_petersen = config.graph == "petersen";
    const Graph graph = builtin_petersen ? Graph::petersen() : load_graph(config.graph);
    const Method method = method_from_name(config.method);
    const bool relax_form = config.form == "relax";
    if (!relax_form && config.form != "qubo") {
        throw std::invalid_argument("form must be 'qubo' or 'relax'");
    }

    PauliSum cut_hamiltonian(1);
    std::vector<VertexLabel> labels;
    Circuit ansatz(1);
    if (relax_form) {
        if (!config.labels.empty()) {
            labels = load_labels(config.labels, graph.n_vertices);
        } else if (builtin_petersen) {
            labels = petersen_relax_labels();
        } else {
            throw std::invalid_argument("relax form on a custom graph needs a label file");
        }
        cut_hamiltonian = maxcut_relax(graph, labels);
        ansatz = builtin_petersen && config.labels.empty()
                     ? relax_ansatz()
                     : ring_ansatz(cut_hamiltonian.n_qubits(), EntanglerKind::CZ, false, true);
    } else {
        cut_hamiltonian = maxcut_qubo(graph);
        ansatz = builtin_petersen ? qubo_ansatz()
                                  : ring_ansatz(graph.n_vertices, EntanglerKind::CX, true, false);
    }
    // Optimizers minimize; the cut objective is maximized.
    const PauliSum objective = negated(cut_hamiltonian);

    MaxCutRunResult result;
    result.trials.resize(config.trials);

    parallel_for(config.trials, resolve_threads(config.threads), [&](int i) {
        const std::uint64_t trial_seed = config.seed + static_cast<std::uint64_t>(i);
        Circuit circuit = ansatz;
        Rng rng(trial_seed);
        initialize_parameters(circuit, config.axis_init, rng);
        EnergyEvaluator eval = config.shots == 0
                                   ? EnergyEvaluator::exact()
                                   : EnergyEvaluator::with_shots(config.shots, trial_seed);
        MaxCutTrialResult& trial = result.trials[i];
        trial.seed = trial_seed;
        for (int sweep_index = 0; sweep_index < config.sweeps; ++sweep_index) {
            SweepOptions options;
            options.method = method;
            options.theta = config.theta;
            options.max_sweeps = 1;
            options.tol = 0.0;
            sweep(circuit, objective, options, eval);

            const StateVector state = evaluate(circuit);
            trial.expected_per_sweep.push_back(expectation(cut_hamiltonian, state));
            if (relax_form) {
                std::vector<int> assignment(graph.n_vertices, 1);
                for (int v = 0; v < graph.n_vertices; ++v) {
                    PauliSum observable(cut_hamiltonian.n_qubits());
                    PauliString ops(cut_hamiltonian.n_qubits(), Pauli::I);
                    ops[labels[v].qubit] = labels[v].op;
                    observable.add_term(1.0, std::move(ops));
                    assignment[v] = expectation(observable, state) < 0.0 ? -1 : 1;
                }
                trial.rounded_per_sweep.push_back(cut_value(graph, assignment));
            }
        }
        if (!trial.expected_per_sweep.empty()) {
            trial.final_expected = trial.expected_per_sweep.back();
        }
        if (!trial.rounded_per_sweep.empty()) {
            trial.final_rounded = trial.rounded_per_sweep.back();
        }
    });

    if (!result.trials.empty() && config.sweeps > 0) {
        result.mean_expected_per_sweep.assign(config.sweeps, 0.0);
        double sum = 0.0;
        result.best_final_expected = -std::numeric_limits<double>::infinity();
        for (const MaxCutTrialResult& trial : result.trials) {
            sum += trial.final_expected;
            result.best_final_expected = std::max(result.best_final_expected,
                                                  trial.final_expected);
            result.best_rounded = std::max(result.best_rounded, trial.final_rounded);
            for (int s = 0; s < config.sweeps; ++s) {
                result.mean_expected_per_sweep[s] += trial.expected_per_sweep[s];
            }
        }
        result.mean_final_expected = sum / static_cast<double>(result.trials.size());
        for (double& value : result.mean_expected_per_sweep) {
            value /= static_cast<double>(result.trials.size());
        }
    }
    if (graph.n_vertices <= 24) {
        result.has_optimum = true;
        result.optimum = max_cut_brute_force(graph).best_cut;
    }
    if (relax_form && cut_hamiltonian.n_qubits() <= 10) {
        result.relax_upper = -ground_energy(objective).energy;
    }

    if (!config.out_dir.empty()) {
        const std::filesystem::path dir(config.out_dir);
        std::filesystem::create_directories(dir);
        std::ostringstream csv;
        csv << (relax_form ? "trial,sweep,expected_value,rounded_cut\n"
                           : "trial,sweep,expected_value\n");
        char buffer[128];
        for (int i = 0; i < config.trials; ++i) {
            const MaxCutTrialResult& trial = result.trials[i];
            for (int s = 0; s < config.sweeps; ++s) {
                if (relax_form) {
                    std::snprintf(buffer, sizeof(buffer), "%d,%d,%.12g,%d\n", i, s + 1,
                                  trial.expected_per_sweep[s], trial.rounded_per_sweep[s]);
                } else {
                    std::snprintf(buffer, sizeof(buffer), "%d,%d,%.12g\n", i, s + 1,
                                  trial.expected_per_sweep[s]);
                }
                csv << buffer;
            }
        }
        write_text_file(dir / "cuts.csv", csv.str());
        json summary;
        summary["config"] = {{"graph", config.graph},   {"form", config.form},
                             {"method", config.method}, {"trials", config.trials},
                             {"sweeps", config.sweeps}, {"seed", config.seed},
                             {"shots", config.shots},   {"axis_init", config.axis_init}};
        summary["mean_final_expected"] = result.mean_final_expected;
        summary["best_final_expected"] = result.best_final_expected;
        summary["mean_expected_per_sweep"] = result.mean_expected_per_sweep;
        if (result.has_optimum) {
            summary["optimum_cut"] = result.optimum;
        }
        if (relax_form) {
            summary["rounding"] = "sign-rounding surrogate";
            summary["best_rounded_cut"] = result.best_rounded;
            summary["relax_upper_bound"] = result.relax_upper;
            json rounded = json::array();
            for (const MaxCutTrialResult& trial : result.trials) {
                rounded.push_back(trial.final_rounded);
            }
            summary["final_rounded_cuts"] = rounded;
        }
        write_text_file(dir / "summary.json", summary.dump(2) + "\n");
    }
    return result;
}

// ---------------------------------------------------------------------------
// Property suites behind `verify`.

namespace {

Axis random_axis(Rng& rng) {
    return Axis::normalized(rng.normal(), rng.normal(), rng.normal());
}

PauliSum random_pauli_sum(int n_qubits, int n_terms, Rng& rng) {
    PauliSum sum(n_qubits);
    for (int t = 0; t < n_terms; ++t) {
        PauliString ops(n_qubits, Pauli::I);
        for (int q = 0; q < n_qubits; ++q) {
            ops[q] = static_cast<Pauli>(rng.below(4));
        }
        sum.add_term(rng.uniform(-1.0, 1.0), std::move(ops));
    }
    sum.normalize();
    return sum;
}

Circuit random_circuit(int n_qubits, int layers, Rng& rng) {
    Circuit c(n_qubits);
    for (int layer = 0; layer < layers; ++layer) {
        for (int q = 0; q < n_qubits; ++q) {
            c.add_param(q, random_axis(rng), rng.angle());
        }
        if (n_qubits >= 2) {
            for (int q = 0; q + 1 < n_qubits; ++q) {
                c.add_entangler(rng.below(2) == 0 ? EntanglerKind::CX : EntanglerKind::CZ, q,
                                q + 1);
            }
        }
    }
    return c;
}

struct Check {
    const char* name;
    bool (*run)(Rng&, bool inject, std::string& detail);
};

bool check_rotation_unitarity(Rng& rng, bool, std::string& detail) {
    for (int i = 0; i < 500; ++i) {
        const Axis axis = random_axis(rng);
        const double theta = rng.uniform(-2.0 * M_PI, 2.0 * M_PI);
        if (!rotation_unitary(axis, theta).is_unitary()) {
            detail = "rotation gate failed the unitarity check";
            return false;
        }
    }
    const Unitary2 rz = rotation_unitary(Axis{0, 0, 1}, 0.7);
    if (std::abs(rz.u00 - std::exp(Complex{0, -0.35})) > 1e-12 || std::abs(rz.u01) > 1e-12) {
        detail = "z rotation does not match its closed form";
        return false;
    }
    return true;
}

bool check_norm_preservation(Rng& rng, bool, std::string& detail) {
    for (int i = 0; i < 50; ++i) {
        const int n = 1 + static_cast<int>(rng.below(4));
        const Circuit c = random_circuit(n, 2, rng);
        const double norm = evaluate(c).norm_sq();
        if (std::abs(norm - 1.0) > 1e-10) {
            detail = "norm drifted to " + std::to_string(norm);
            return false;
        }
    }
    return true;
}

bool check_lemma1(Rng& rng, bool inject, std::string& detail) {
    for (int i = 0; i < 40; ++i) {
        const int n = 1 + static_cast<int>(rng.below(3));
        const Circuit c = random_circuit(n, 2, rng);
        const PauliSum m = random_pauli_sum(n, 4, rng);
        const std::vector<std::size_t> slots = c.param_slots();
        const std::size_t slot = slots[rng.below(slots.size())];
        EnergyEvaluator eval = EnergyEvaluator::exact();
        AxisModel model = estimate_axis_model(c, m, slot, false, eval);
        if (inject) {
            model.quadratic.m[0][1] += 1e-3;  // break the symmetry on purpose
        }
        for (int row = 0; row < 3; ++row) {
            for (int col = row + 1; col < 3; ++col) {
                if (std::abs(model.quadratic.m[row][col] - model.quadratic.m[col][row]) > 1e-12) {
                    detail = "R matrix is not symmetric";
                    return false;
                }
            }
        }
        const EigenTriple eig = eig3_symmetric(model.quadratic);
        for (int k = 0; k < 10; ++k) {
            const Axis axis = random_axis(rng);
            const double measured =
                energy_with_substitution(c, m, slot, rotation_unitary(axis, M_PI));
            const double predicted = model.landscape_pi(Vec3{axis.x, axis.y, axis.z});
            if (std::abs(measured - predicted) > 1e-9) {
                detail = "pi-rotation energy differs from the quadratic form";
                return false;
            }
            if (measured < eig.values[0] / 2.0 - 1e-9 || measured > eig.values[2] / 2.0 + 1e-9) {
                detail = "sampled energy escaped the eigenvalue bounds";
                return false;
            }
        }
    }
    return true;
}

bool check_lemma2(Rng& rng, bool, std::string& detail) {
    int tested = 0;
    while (tested < 300) {
        const Axis a = random_axis(rng);
        const Axis b = random_axis(rng);
        const double dot = a.dot(b);
        if (std::abs(dot) > 1.0 - 1e-6) {
            continue;
        }
        ++tested;
        const Axis composite_axis = Axis::normalized(a.cross(b).x, a.cross(b).y, a.cross(b).z);
        const double composite_angle = 2.0 * std::acos(std::clamp(-dot, -1.0, 1.0));
        const Unitary2 product = rotation_unitary(a, M_PI) * rotation_unitary(b, M_PI);
        const Unitary2 expected = rotation_unitary(composite_axis, composite_angle);
        if (std::abs(abs_trace_overlap(product, expected) - 2.0) > 1e-9) {
            detail = "pi-rotation composition mismatch";
            return false;
        }
    }
    return true;
}

bool check_two_gate_universality(Rng& rng, bool, std::string& detail) {
    for (int i = 0; i < 200; ++i) {
        const double psi = rng.uniform(-M_PI, M_PI);
        const double phi = rng.uniform(-M_PI, M_PI);
        const double lam = rng.uniform(-M_PI, M_PI);
        const Unitary2 target = universal_unitary(psi, phi, lam);
        // Strip the determinant phase, then read off the rotation axis/angle.
        const Complex det = target.u00 * target.u11 - target.u01 * target.u10;
        const Complex phase = std::sqrt(det);
        const Complex a00 = target.u00 / phase;
        const Complex a01 = target.u01 / phase;
        const Complex a10 = target.u10 / phase;
        const Complex a11 = target.u11 / phase;
        const double cos_half = std::clamp(0.5 * (a00 + a11).real(), -1.0, 1.0);
        const Vec3 w{-0.5 * (a01 + a10).imag(), 0.5 * (a10 - a01).real(),
                     0.5 * (a11 - a00).imag()};
        const double sin_half = w.norm();
        Axis axis{0, 0, 1};
        if (sin_half > 1e-12) {
            axis = Axis{w.x / sin_half, w.y / sin_half, w.z / sin_half};
        }
        const double theta = 2.0 * std::atan2(sin_half, cos_half);
        // Split R_axis(theta) into two pi rotations in the plane normal to axis.
        Axis seed{1, 0, 0};
        if (std::abs(axis.x) > 0.9) {
            seed = Axis{0, 1, 0};
        }
        const Axis u = Axis::normalized(axis.cross(seed).x, axis.cross(seed).y,
                                        axis.cross(seed).z);
        const Axis v = axis.cross(u);
        const double alpha = M_PI - theta / 2.0;
        const Axis first = u;
        const Axis second{std::cos(alpha) * u.x + std::sin(alpha) * v.x,
                          std::cos(alpha) * u.y + std::sin(alpha) * v.y,
                          std::cos(alpha) * u.z + std::sin(alpha) * v.z};
        const Unitary2 product = rotation_unitary(first, M_PI) * rotation_unitary(second, M_PI);
        if (std::abs(abs_trace_overlap(product, target) - 2.0) > 1e-9) {
            detail = "two pi rotations failed to realize a universal gate";
            return false;
        }
    }
    return true;
}

bool check_native_decomposition(Rng& rng, bool, std::string& detail) {
    std::vector<Axis> axes;
    for (int i = 0; i < 300; ++i) {
        axes.push_back(random_axis(rng));
    }
    axes.push_back(Axis{0, 0, 1});
    axes.push_back(Axis{0, 0, -1});
    axes.push_back(Axis::normalized(1e-7, -1e-7, 1.0));
    axes.push_back(Axis::normalized(-1e-7, 1e-7, -1.0));
    for (const Axis& axis : axes) {
        const Unitary2 composed = compose_native(decompose_pi_fraxis(axis));
        const Unitary2 direct = rotation_unitary(axis, M_PI);
        if (std::abs(abs_trace_overlap(composed, direct) - 2.0) > 1e-9) {
            detail = "native sequence does not reproduce the pi rotation";
            return false;
        }
    }
    return true;
}

bool check_landscape_identity(Rng& rng, bool, std::string& detail) {
    for (int i = 0; i < 25; ++i) {
        const Circuit c = random_circuit(2, 2, rng);
        const PauliSum m = random_pauli_sum(2, 4, rng);
        const std::vector<std::size_t> slots = c.param_slots();
        const std::size_t slot = slots[rng.below(slots.size())];
        EnergyEvaluator eval = EnergyEvaluator::exact();
        const AxisModel model = estimate_axis_model(c, m, slot, true, eval);
        for (int k = 0; k < 8; ++k) {
            const Axis axis = random_axis(rng);
            const double theta = rng.uniform(-2.0 * M_PI, 2.0 * M_PI);
            const double measured =
                energy_with_substitution(c, m, slot, rotation_unitary(axis, theta));
            const double predicted = model.landscape(Vec3{axis.x, axis.y, axis.z}, theta);
            if (std::abs(measured - predicted) > 1e-9) {
                detail = "landscape reconstruction error " +
                         std::to_string(std::abs(measured - predicted));
                return false;
            }
        }
    }
    return true;
}

bool check_eig3_residuals(Rng& rng, bool, std::string& detail) {
    for (int i = 0; i < 1000; ++i) {
        Mat3 r;
        for (int row = 0; row < 3; ++row) {
            for (int col = row; col < 3; ++col) {
                r.m[row][col] = r.m[col][row] = rng.uniform(-5.0, 5.0);
            }
        }
        const EigenTriple eig = eig3_symmetric(r);
        for (int k = 0; k < 3; ++k) {
            const Vec3 residual = r.apply(eig.vectors[k]) - eig.vectors[k] * eig.values[k];
            if (residual.norm() > 1e-9) {
                detail = "eigen residual " + std::to_string(residual.norm());
                return false;
            }
        }
        if (std::abs(eig.vectors[0].dot(eig.vectors[1])) > 1e-9 ||
            std::abs(eig.vectors[0].dot(eig.vectors[2])) > 1e-9 ||
            std::abs(eig.vectors[1].dot(eig.vectors[2])) > 1e-9) {
            detail = "eigenvectors lost orthogonality";
            return false;
        }
    }
    return true;
}

bool check_axis_solver(Rng& rng, bool, std::string& detail) {
    for (int i = 0; i < 10; ++i) {
        Circuit c = random_circuit(1, 2, rng);
        const PauliSum m = random_pauli_sum(1, 3, rng);
        const std::vector<std::size_t> slots = c.param_slots();
        const std::size_t slot = slots[rng.below(slots.size())];
        EnergyEvaluator eval = EnergyEvaluator::exact();
        const UpdateResult update = theta_fraxis_update(c, m, slot, M_PI / 2.0, eval);
        double best_sampled = std::numeric_limits<double>::infinity();
        for (int k = 0; k < 10000; ++k) {
            const Axis axis = random_axis(rng);
            best_sampled = std::min(
                best_sampled,
                energy_with_substitution(c, m, slot, rotation_unitary(axis, M_PI / 2.0)));
        }
        if (update.energy > best_sampled + 1e-6) {
            detail = "solved axis lost to random sampling by " +
                     std::to_string(update.energy - best_sampled);
            return false;
        }
    }
    return true;
}

}  // namespace

int run_verify(const VerifyOptions& options) {
    std::ostream& out = options.out ? *options.out : std::cout;
    static const Check checks[] = {
        {"rotation-unitarity", check_rotation_unitarity},
        {"norm-preservation", check_norm_preservation},
        {"lemma1-quadratic-form", check_lemma1},
        {"lemma2-composition", check_lemma2},
        {"two-gate-universality", check_two_gate_universality},
        {"native-decomposition", check_native_decomposition},
        {"landscape-identity", check_landscape_identity},
        {"eig3-residuals", check_eig3_residuals},
        {"axis-solver", check_axis_solver},
    };
    if (!options.inject.empty()) {
        bool known = false;
        for (const Check& check : checks) {
            known = known || options.inject == check.name;
        }
        if (!known) {
            throw std::invalid_argument("unknown check name: " + options.inject);
        }
    }
    int failures = 0;
    for (const Check& check : checks) {
        Rng rng(options.seed);
        std::string detail;
        bool passed = false;
        try {
            passed = check.run(rng, options.inject == check.name, detail);
        } catch (const std::exception& err) {
            detail = err.what();
        }
        if (passed) {
            out << "PASS " << check.name << "\n";
        } else {
            out << "FAIL " << check.name << (detail.empty() ? "" : ": " + detail) << "\n";
            ++failures;
        }
    }
    return failures;
}

}  // namespace fraxis
