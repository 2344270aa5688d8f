#include "fraxis/expressibility.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "fraxis/rng.hpp"

namespace fraxis {

namespace {

Axis spherical_axis(double polar, double azimuth) {
    return Axis{std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth),
                std::cos(polar)};
}

void randomize_params(Circuit& c, const std::vector<std::size_t>& slots, Sampler sampler,
                      Rng& rng) {
    const bool single_qubit = c.n_qubits() == 1;
    for (std::size_t slot : slots) {
        ParamGate& param = c.param_at(slot);
        switch (sampler) {
            case Sampler::RotosolveAngles:
                param.theta = rng.angle();
                break;
            case Sampler::RotoselectAxisAngle: {
                // Z does nothing on a bare |0>, so the single-qubit set is {x, y}.
                const int n_axes = single_qubit ? 2 : 3;
                const std::uint64_t pick = rng.below(n_axes);
                param.axis = pick == 0 ? Axis{1, 0, 0} : pick == 1 ? Axis{0, 1, 0} : Axis{0, 0, 1};
                param.theta = rng.angle();
                break;
            }
            case Sampler::FraxisParameterRandom: {
                const double polar = rng.uniform(0.0, M_PI);
                const double azimuth = rng.uniform(-M_PI, M_PI);
                param.axis = spherical_axis(polar, azimuth);
                param.theta = M_PI;
                break;
            }
            case Sampler::FraxisStateRandom: {
                const double gx = rng.normal();
                const double gy = rng.normal();
                const double gz = rng.normal();
                param.axis = Axis::normalized(gx, gy, gz);
                param.theta = M_PI;
                break;
            }
        }
    }
}

}  // namespace

FidelityHistogram::FidelityHistogram(double width) : bin_width(width) {
    if (width <= 0.0 || width > 1.0) {
        throw std::invalid_argument("bin width must lie in (0, 1]");
    }
    counts.assign(static_cast<std::size_t>(std::ceil(1.0 / width)), 0);
}

void FidelityHistogram::add(double fidelity) {
    const double clamped = std::clamp(fidelity, 0.0, 1.0);
    const std::size_t bin = std::min(static_cast<std::size_t>(clamped / bin_width),
                                     counts.size() - 1);
    ++counts[bin];
    ++total;
}

void FidelityHistogram::merge(const FidelityHistogram& other) {
    if (other.counts.size() != counts.size() || other.bin_width != bin_width) {
        throw std::invalid_argument("histogram layouts differ");
    }
    for (std::size_t i = 0; i < counts.size(); ++i) {
        counts[i] += other.counts[i];
    }
    total += other.total;
}

const char* sampler_name(Sampler sampler) {
    switch (sampler) {
        case Sampler::RotosolveAngles: return "rotosolve";
        case Sampler::RotoselectAxisAngle: return "rotoselect";
        case Sampler::FraxisParameterRandom: return "fraxis-parameter";
        case Sampler::FraxisStateRandom: return "fraxis-state";
    }
    return "unknown";
}

Sampler sampler_from_name(const std::string& name) {
    if (name == "rotosolve") return Sampler::RotosolveAngles;
    if (name == "rotoselect") return Sampler::RotoselectAxisAngle;
    if (name == "fraxis-parameter" || name == "fraxis") return Sampler::FraxisParameterRandom;
    if (name == "fraxis-state") return Sampler::FraxisStateRandom;
    throw std::invalid_argument("unknown sampler: " + name);
}

FidelityHistogram sample_fidelities(const Circuit& ansatz, Sampler sampler, std::uint64_t count,
                                    std::uint64_t seed, double bin_width, int threads) {
    if (count == 0) {
        throw std::invalid_argument("sample count must be >= 1");
    }
    const std::vector<std::size_t> slots = ansatz.param_slots();
    const int workers = std::max(1, std::min<int>(threads, 64));

    std::vector<FidelityHistogram> partials(workers, FidelityHistogram(bin_width));
    std::atomic<std::uint64_t> cursor{0};
    constexpr std::uint64_t kChunk = 256;

    auto work = [&](int worker) {
        Circuit left = ansatz;
        Circuit right = ansatz;
        FidelityHistogram& histogram = partials[worker];
        for (;;) {
            const std::uint64_t begin = cursor.fetch_add(kChunk);
            if (begin >= count) {
                return;
            }
            const std::uint64_t end = std::min(begin + kChunk, count);
            for (std::uint64_t i = begin; i < end; ++i) {
                Rng rng = Rng::stream(seed, i);
                randomize_params(left, slots, sampler, rng);
                randomize_params(right, slots, sampler, rng);
                histogram.add(fidelity(evaluate(left), evaluate(right)));
            }
        }
    };

    if (workers == 1) {
        work(0);
        return partials[0];
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back(work, w);
    }
    for (std::thread& t : pool) {
        t.join();
    }
    FidelityHistogram result = std::move(partials[0]);
    for (int w = 1; w < workers; ++w) {
        result.merge(partials[w]);
    }
    return result;
}

double haar_pdf(double fidelity, std::uint64_t dim) {
    if (dim < 2) {
        throw std::invalid_argument("haar_pdf requires dimension >= 2");
    }
    if (fidelity < 0.0 || fidelity > 1.0) {
        throw std::invalid_argument("fidelity must lie in [0, 1]");
    }
    const double n = static_cast<double>(dim);
    if (dim == 2) {
        return 1.0;
    }
    return (n - 1.0) * std::pow(1.0 - fidelity, n - 2.0);
}

namespace {

// log of the exact Haar mass over [lo, hi]:
// (1-lo)^(N-1) - (1-hi)^(N-1), evaluated stably for large N.
double log_haar_mass(double lo, double hi, double n) {
    const double log_left = (n - 1.0) * std::log1p(-lo);
    if (hi >= 1.0) {
        return log_left;
    }
    const double log_right = (n - 1.0) * std::log1p(-hi);
    // mass = e^{log_left} (1 - e^{log_right - log_left})
    return log_left + std::log1p(-std::exp(log_right - log_left));
}

}  // namespace

double kl_divergence(const FidelityHistogram& histogram, std::uint64_t dim) {
    if (histogram.total == 0) {
        throw std::invalid_argument("histogram is empty");
    }
    if (dim < 2) {
        throw std::invalid_argument("kl_divergence requires dimension >= 2");
    }
    const double n = static_cast<double>(dim);
    const double total = static_cast<double>(histogram.total);
    double kl = 0.0;
    for (std::size_t bin = 0; bin < histogram.counts.size(); ++bin) {
        if (histogram.counts[bin] == 0) {
            continue;
        }
        const double lo = static_cast<double>(bin) * histogram.bin_width;
        const double hi = std::min(1.0, lo + histogram.bin_width);
        const double p = static_cast<double>(histogram.counts[bin]) / total;
        kl += p * (std::log(p) - log_haar_mass(lo, hi, n));
    }
    return kl;
}

std::string histogram_csv(const FidelityHistogram& histogram) {
    std::ostringstream out;
    out << "bin_lower,count\n";
    char buffer[64];
    for (std::size_t bin = 0; bin < histogram.counts.size(); ++bin) {
        std::snprintf(buffer, sizeof(buffer), "%.12g,%llu\n",
                      static_cast<double>(bin) * histogram.bin_width,
                      static_cast<unsigned long long>(histogram.counts[bin]));
        out << buffer;
    }
    return out.str();
}

}  // namespace fraxis
