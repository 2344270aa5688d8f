#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fraxis/circuit.hpp"

namespace fraxis {

/// Counts of sampled fidelities over [0, 1]; values are clamped before binning.
struct FidelityHistogram {
    explicit FidelityHistogram(double bin_width = 0.001);

    double bin_width;
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;

    void add(double fidelity);
    void merge(const FidelityHistogram& other);
};

enum class Sampler {
    RotosolveAngles,        // angles uniform on (-pi, pi], axes as built
    RotoselectAxisAngle,    // axis from the allowed Cartesian set, angle uniform
    FraxisParameterRandom,  // theta = pi, axis from uniform spherical angles
    FraxisStateRandom,      // theta = pi, axis from normalized Gaussians
};

const char* sampler_name(Sampler sampler);
Sampler sampler_from_name(const std::string& name);

/// Draws `count` independent pairs of parameter assignments for the ansatz,
/// evaluates both circuits from |0...0>, and bins |<psi|psi'>|^2.
/// Sample i uses stream i of `seed`, so the histogram is independent of the
/// thread count.
FidelityHistogram sample_fidelities(const Circuit& ansatz, Sampler sampler, std::uint64_t count,
                                    std::uint64_t seed, double bin_width = 0.001,
                                    int threads = 1);

/// Fidelity density of Haar-random state pairs: (N - 1)(1 - F)^(N - 2).
double haar_pdf(double fidelity, std::uint64_t dim);

/// sum_bins p ln(p / q) against the exact Haar mass of each bin (empty bins
/// contribute zero). Natural logarithm.
double kl_divergence(const FidelityHistogram& histogram, std::uint64_t dim);

struct ExpressibilityReport {
    double kl_divergence = 0.0;
    std::string ansatz;
    std::string sampler;
    int n_qubits = 0;
    std::uint64_t samples = 0;
    double bin_width = 0.001;
};

/// CSV with header "bin_lower,count".
std::string histogram_csv(const FidelityHistogram& histogram);

}  // namespace fraxis
