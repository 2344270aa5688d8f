#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fraxis/expressibility.hpp"
#include "fraxis/optimize.hpp"
#include "fraxis/rng.hpp"

namespace fraxis {

/// Builds a Hamiltonian from a CLI-style spec:
///   "two-qubit-model"
///   "heisenberg:n=5,J=1,h=1,periodic"  (or ",open")
///   "file:<path>" or a bare path to a Pauli-sum file
PauliSum hamiltonian_from_spec(const std::string& spec);

/// Builds an ansatz from a CLI-style spec:
///   "fig3" | "circuit-a:L=3" | "circuit-b:L=2" | "qubo" | "relax"
///   "single-qubit" (one free rotation on one qubit)
///   "file:<path>" or a bare path to a circuit file
Circuit ansatz_from_spec(const std::string& spec);

/// Thread count: explicit request, else FRAXIS_THREADS, else hardware.
int resolve_threads(int requested);

struct OptimizeConfig {
    std::string hamiltonian = "two-qubit-model";
    std::string ansatz = "fig3";
    std::string method = "pi-fraxis";
    int trials = 1;
    int sweeps = 100;
    double tol = 1e-8;
    double theta = M_PI / 2;  // theta-fraxis fixed angle
    std::uint64_t shots = 0;  // 0 = exact
    std::uint64_t seed = 0;
    std::string axis_init = "parameter";  // parameter | state | y
    std::string out_dir;                  // empty = no files
    int threads = 0;
};

struct TrialResult {
    std::uint64_t seed = 0;
    double final_energy = 0.0;
    std::uint64_t evaluations = 0;
    int sweeps_executed = 0;
    std::string status;
    Trajectory trajectory;
};

struct OptimizeResult {
    std::vector<TrialResult> trials;
    double mean_final = 0.0;
    double min_final = 0.0;
    double q25_final = 0.0;
    double median_final = 0.0;
    double q75_final = 0.0;
    double max_final = 0.0;
    bool has_ground_energy = false;
    double ground = 0.0;
    std::uint64_t total_evaluations = 0;
    std::uint64_t param_slots = 0;
};

/// Runs `trials` independent sweeps with trial i seeded by seed + i.
/// Axes and angles are drawn identically for every method from the trial
/// stream, so methods are comparable seed by seed. Writes trial_###.csv and
/// summary.json under out_dir when set.
OptimizeResult run_optimize(const OptimizeConfig& config);

/// Initializes every Param slot of `c` from the trial stream: axes per
/// `axis_init` ("parameter", "state" or "y"), angles uniform on (-pi, pi].
void initialize_parameters(Circuit& c, const std::string& axis_init, Rng& rng);

struct ExpressibilityConfig {
    std::string ansatz = "single-qubit";
    std::string sampler = "fraxis-parameter";
    std::uint64_t samples = 100000;
    double bin_width = 0.001;
    std::uint64_t seed = 0;
    std::string out_dir;
    int threads = 0;
};

struct ExpressibilityResult {
    ExpressibilityReport report;
    FidelityHistogram histogram{0.001};
};

/// KL divergence of the sampled fidelity distribution against Haar.
/// Writes histogram.csv and report.json under out_dir when set.
ExpressibilityResult run_expressibility(const ExpressibilityConfig& config);

struct MaxCutConfig {
    std::string graph = "petersen";  // "petersen" or a graph file path
    std::string form = "qubo";       // qubo | relax
    std::string method = "pi-fraxis";
    std::string labels;  // label file for relax on custom graphs
    int trials = 20;
    int sweeps = 3;
    double theta = M_PI / 2;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::string axis_init = "parameter";
    std::string out_dir;
    int threads = 0;
};

struct MaxCutTrialResult {
    std::uint64_t seed = 0;
    std::vector<double> expected_per_sweep;
    std::vector<int> rounded_per_sweep;  // relax only (sign-rounding surrogate)
    double final_expected = 0.0;
    int final_rounded = 0;
};

struct MaxCutRunResult {
    std::vector<MaxCutTrialResult> trials;
    double mean_final_expected = 0.0;
    double best_final_expected = 0.0;
    int best_rounded = 0;
    bool has_optimum = false;
    int optimum = 0;            // brute-force maximum cut
    double relax_upper = 0.0;   // max eigenvalue of the relaxation (relax form)
    std::vector<double> mean_expected_per_sweep;
};

/// Maximizes the cut Hamiltonian (negated internally). For the relax form
/// the final state is rounded by the sign of each vertex observable; this is
/// a sign-rounding surrogate, not the full randomized rounding scheme.
/// Writes cuts.csv and summary.json under out_dir when set.
MaxCutRunResult run_maxcut(const MaxCutConfig& config);

struct VerifyOptions {
    std::string inject;  // name of a check to perturb (test hook)
    std::uint64_t seed = 2024;
    std::ostream* out = nullptr;  // defaults to std::cout
};

/// Runs the fixed-seed property suites, printing one PASS/FAIL line per
/// check. Returns the number of failed checks.
int run_verify(const VerifyOptions& options);

}  // namespace fraxis
