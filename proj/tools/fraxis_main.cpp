// Command-line driver. Talks to the library exclusively through the C API.
//
// Exit codes: 0 success, 1 check/run failure, 2 usage error.

#include <cinttypes>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "fraxis.h"

namespace {

int report_error(const char* command, fraxis_status status) {
    std::fprintf(stderr, "fraxis %s: %s\n", command, fraxis_last_error());
    return status == FRAXIS_ERR_INVALID_ARGUMENT || status == FRAXIS_ERR_PARSE ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Free-axis optimization of parametrized quantum circuits"};
    app.set_version_flag("--version", fraxis_version());
    app.require_subcommand(1);

    // --- optimize ---------------------------------------------------------
    fraxis_optimize_config opt;
    fraxis_optimize_config_init(&opt);
    std::string opt_ham = opt.hamiltonian, opt_ansatz = opt.ansatz, opt_method = opt.method;
    std::string opt_axis_init = opt.axis_init, opt_out;
    CLI::App* optimize = app.add_subcommand("optimize", "Minimize a Hamiltonian with a PQC");
    optimize->add_option("--ham", opt_ham,
                         "Hamiltonian: two-qubit-model | heisenberg:n=..,J=..,h=..,periodic | "
                         "file:<path>");
    optimize->add_option("--ansatz", opt_ansatz,
                         "Ansatz: fig3 | circuit-a:L=.. | circuit-b:L=.. | qubo | relax | "
                         "single-qubit | file:<path>");
    optimize->add_option("--method", opt_method,
                         "rotosolve | rotoselect | pi-fraxis | theta-fraxis");
    optimize->add_option("--trials", opt.trials, "Independent seeded trials");
    optimize->add_option("--sweeps", opt.sweeps, "Maximum full sweeps per trial");
    optimize->add_option("--tol", opt.tol, "Per-sweep improvement threshold (0 disables)");
    optimize->add_option("--theta", opt.theta, "Fixed angle for theta-fraxis");
    optimize->add_option("--shots", opt.shots, "Shots per energy estimate (0 = exact)");
    optimize->add_option("--seed", opt.seed, "Base seed; trial i uses seed+i");
    optimize->add_option("--axis-init", opt_axis_init, "parameter | state | y");
    optimize->add_option("--out", opt_out, "Output directory (trial CSVs + summary.json)");
    optimize->add_option("--threads", opt.threads, "Worker threads (0 = FRAXIS_THREADS or auto)");

    // --- expressibility ----------------------------------------------------
    fraxis_expressibility_config expr;
    fraxis_expressibility_config_init(&expr);
    std::string expr_ansatz = expr.ansatz, expr_sampler = expr.sampler, expr_out;
    CLI::App* expressibility =
        app.add_subcommand("expressibility", "Fidelity-distribution KL divergence vs Haar");
    expressibility->add_option("--ansatz", expr_ansatz, "Ansatz spec");
    expressibility->add_option("--sampler", expr_sampler,
                               "rotosolve | rotoselect | fraxis-parameter | fraxis-state");
    expressibility->add_option("--samples", expr.samples, "Fidelity samples");
    expressibility->add_option("--bin-width", expr.bin_width, "Histogram bin width");
    expressibility->add_option("--seed", expr.seed, "Base seed");
    expressibility->add_option("--out", expr_out, "Output directory (histogram.csv + report.json)");
    expressibility->add_option("--threads", expr.threads, "Worker threads");

    // --- maxcut -------------------------------------------------------------
    fraxis_maxcut_config mc;
    fraxis_maxcut_config_init(&mc);
    std::string mc_graph = mc.graph, mc_form = mc.form, mc_method = mc.method;
    std::string mc_labels, mc_axis_init = mc.axis_init, mc_out;
    CLI::App* maxcut = app.add_subcommand("maxcut", "MaxCut via QUBO or quantum relaxation");
    maxcut->add_option("--graph", mc_graph, "petersen | graph file path");
    maxcut->add_option("--form", mc_form, "qubo | relax");
    maxcut->add_option("--method", mc_method, "rotosolve | rotoselect | pi-fraxis | theta-fraxis");
    maxcut->add_option("--labels", mc_labels, "Vertex label file (relax, custom graphs)");
    maxcut->add_option("--trials", mc.trials, "Independent seeded trials");
    maxcut->add_option("--sweeps", mc.sweeps, "Full sweeps per trial");
    maxcut->add_option("--theta", mc.theta, "Fixed angle for theta-fraxis");
    maxcut->add_option("--shots", mc.shots, "Shots per energy estimate (0 = exact)");
    maxcut->add_option("--seed", mc.seed, "Base seed");
    maxcut->add_option("--axis-init", mc_axis_init, "parameter | state | y");
    maxcut->add_option("--out", mc_out, "Output directory (cuts.csv + summary.json)");
    maxcut->add_option("--threads", mc.threads, "Worker threads");

    // --- verify -------------------------------------------------------------
    std::string inject;
    CLI::App* verify = app.add_subcommand("verify", "Run the built-in property checks");
    verify->add_option("--inject", inject, "Perturb the named check (testing hook)")
        ->group("");  // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (optimize->parsed()) {
        opt.hamiltonian = opt_ham.c_str();
        opt.ansatz = opt_ansatz.c_str();
        opt.method = opt_method.c_str();
        opt.axis_init = opt_axis_init.c_str();
        opt.out_dir = opt_out.c_str();
        fraxis_optimize_summary summary = {};
        const fraxis_status status = fraxis_run_optimize(&opt, &summary);
        if (status != FRAXIS_OK) {
            return report_error("optimize", status);
        }
        std::printf("trials: %d\n", opt.trials);
        if (opt.trials > 0) {
            std::printf("final energy  mean: %.12g  min: %.12g  median: %.12g  max: %.12g\n",
                        summary.mean_final, summary.min_final, summary.median_final,
                        summary.max_final);
        }
        if (summary.has_ground_energy) {
            std::printf("exact ground energy: %.12g\n", summary.ground_energy);
        }
        std::printf("circuit evaluations: %" PRIu64 "\n", summary.total_evaluations);
        if (!opt_out.empty()) {
            std::printf("wrote %s/trial_*.csv and summary.json\n", opt_out.c_str());
        }
        return 0;
    }

    if (expressibility->parsed()) {
        expr.ansatz = expr_ansatz.c_str();
        expr.sampler = expr_sampler.c_str();
        expr.out_dir = expr_out.c_str();
        fraxis_expressibility_summary summary = {};
        const fraxis_status status = fraxis_run_expressibility(&expr, &summary);
        if (status != FRAXIS_OK) {
            return report_error("expressibility", status);
        }
        std::printf("ansatz: %s  sampler: %s  qubits: %d  samples: %" PRIu64 "\n",
                    expr_ansatz.c_str(), expr_sampler.c_str(), summary.n_qubits, summary.samples);
        std::printf("kl_divergence: %.6g\n", summary.kl_divergence);
        if (!expr_out.empty()) {
            std::printf("wrote %s/histogram.csv and report.json\n", expr_out.c_str());
        }
        return 0;
    }

    if (maxcut->parsed()) {
        mc.graph = mc_graph.c_str();
        mc.form = mc_form.c_str();
        mc.method = mc_method.c_str();
        mc.labels = mc_labels.c_str();
        mc.axis_init = mc_axis_init.c_str();
        mc.out_dir = mc_out.c_str();
        fraxis_maxcut_summary summary = {};
        const fraxis_status status = fraxis_run_maxcut(&mc, &summary);
        if (status != FRAXIS_OK) {
            return report_error("maxcut", status);
        }
        if (mc.trials > 0 && mc.sweeps > 0) {
            std::printf("mean expected value: %.12g  best: %.12g\n", summary.mean_final_expected,
                        summary.best_final_expected);
        }
        if (summary.has_optimum) {
            std::printf("brute-force optimum cut: %d\n", summary.optimum_cut);
        }
        if (std::string(mc_form) == "relax") {
            std::printf("best sign-rounded cut (surrogate): %d\n", summary.best_rounded_cut);
            std::printf("relaxation upper bound: %.12g\n", summary.relax_upper_bound);
        }
        if (!mc_out.empty()) {
            std::printf("wrote %s/cuts.csv and summary.json\n", mc_out.c_str());
        }
        return 0;
    }

    if (verify->parsed()) {
        int failures = 0;
        const fraxis_status status =
            fraxis_run_verify(inject.empty() ? nullptr : inject.c_str(), &failures);
        if (status != FRAXIS_OK) {
            return report_error("verify", status);
        }
        if (failures != 0) {
            std::fprintf(stderr, "%d check(s) failed\n", failures);
            return 1;
        }
        return 0;
    }
    return 2;
}
