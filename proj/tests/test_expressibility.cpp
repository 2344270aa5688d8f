#include "doctest.h"

#include <cmath>

#include "fraxis/expressibility.hpp"
#include "test_helpers.hpp"

using namespace fraxis;

TEST_CASE("haar pdf values and normalization") {
    CHECK(haar_pdf(0.3, 2) == doctest::Approx(1.0));
    CHECK(haar_pdf(0.9, 2) == doctest::Approx(1.0));
    CHECK(haar_pdf(0.0, 4) == doctest::Approx(3.0));
    CHECK_THROWS_AS(haar_pdf(0.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(haar_pdf(1.5, 2), std::invalid_argument);

    for (std::uint64_t dim : {2ull, 4ull, 32ull, 64ull}) {
        // Composite Simpson on a fine grid.
        const int intervals = 200000;
        const double h = 1.0 / intervals;
        double integral = haar_pdf(0.0, dim) + haar_pdf(1.0, dim);
        for (int i = 1; i < intervals; ++i) {
            integral += (i % 2 == 1 ? 4.0 : 2.0) * haar_pdf(i * h, dim);
        }
        integral *= h / 3.0;
        CHECK(integral == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("kl of a point mass") {
    FidelityHistogram h(0.001);
    for (int i = 0; i < 1000; ++i) {
        h.add(0.5005);
    }
    CHECK(kl_divergence(h, 2) == doctest::Approx(std::log(1000.0)).epsilon(1e-9));
}

TEST_CASE("kl of haar samples against haar is small") {
    Rng rng(1234);
    FidelityHistogram h(0.001);
    for (int i = 0; i < 100000; ++i) {
        const StateVector a = oracle::random_state(1, rng);
        const StateVector b = oracle::random_state(1, rng);
        h.add(fidelity(a, b));
    }
    const double kl = kl_divergence(h, 2);
    CHECK(kl >= 0.0);
    CHECK(kl < 0.01);
}

TEST_CASE("histogram mechanics") {
    FidelityHistogram h(0.001);
    CHECK(h.counts.size() == 1000);
    h.add(1.0);   // clamped into the last bin
    h.add(2.0);   // clamped
    h.add(-0.1);  // clamped into the first bin
    CHECK(h.counts.front() == 1);
    CHECK(h.counts.back() == 2);
    CHECK(h.total == 3);
    CHECK_THROWS_AS(FidelityHistogram(0.0), std::invalid_argument);
}

TEST_CASE("sampler basics") {
    const Circuit ansatz = single_qubit_ansatz();
    const FidelityHistogram one = sample_fidelities(ansatz, Sampler::RotosolveAngles, 1, 42);
    CHECK(one.total == 1);
    std::uint64_t filled = 0;
    for (std::uint64_t c : one.counts) {
        filled += c;
    }
    CHECK(filled == 1);
    CHECK_THROWS_AS(sample_fidelities(ansatz, Sampler::RotosolveAngles, 0, 42),
                    std::invalid_argument);
}

TEST_CASE("sampling is deterministic and thread-count invariant") {
    const Circuit ansatz = single_qubit_ansatz();
    const FidelityHistogram a =
        sample_fidelities(ansatz, Sampler::FraxisParameterRandom, 5000, 7, 0.001, 1);
    const FidelityHistogram b =
        sample_fidelities(ansatz, Sampler::FraxisParameterRandom, 5000, 7, 0.001, 2);
    CHECK(a.total == b.total);
    CHECK(a.counts == b.counts);
}

TEST_CASE("single-axis sampler reproduces the arcsine fidelity law") {
    const Circuit ansatz = single_qubit_ansatz();
    const std::uint64_t samples = 100000;
    const FidelityHistogram h =
        sample_fidelities(ansatz, Sampler::RotosolveAngles, samples, 11, 0.001, 2);

    // Chi-square against the exact bin masses of 1/(pi sqrt(F(1-F))),
    // interior bins only (the edge bins hold the integrable singularities).
    auto mass = [](double lo, double hi) {
        return (2.0 / M_PI) * (std::asin(std::sqrt(hi)) - std::asin(std::sqrt(lo)));
    };
    double chi2 = 0.0;
    int dof = 0;
    for (std::size_t bin = 10; bin < 990; ++bin) {
        const double expected = samples * mass(bin * 0.001, bin * 0.001 + 0.001);
        const double observed = static_cast<double>(h.counts[bin]);
        chi2 += (observed - expected) * (observed - expected) / expected;
        ++dof;
    }
    // dof = 980; a healthy sampler sits near it (observed 942 at this seed).
    CHECK(chi2 < 1150.0);
    CHECK(chi2 > 700.0);
}

TEST_CASE("free-axis sampling covers every interior bin") {
    const Circuit ansatz = single_qubit_ansatz();
    const FidelityHistogram h =
        sample_fidelities(ansatz, Sampler::FraxisParameterRandom, 100000, 3, 0.001, 2);
    for (std::size_t bin = 1; bin < 999; ++bin) {
        CHECK(h.counts[bin] > 0);
    }
}

TEST_CASE("finite-sample kl bias shrinks with more samples") {
    const Circuit ansatz = single_qubit_ansatz();
    for (Sampler sampler : {Sampler::RotosolveAngles, Sampler::FraxisParameterRandom}) {
        const FidelityHistogram small = sample_fidelities(ansatz, sampler, 10000, 5, 0.001, 2);
        const FidelityHistogram large = sample_fidelities(ansatz, sampler, 100000, 5, 0.001, 2);
        CHECK(kl_divergence(large, 2) <= kl_divergence(small, 2) + 0.02);
    }
}

TEST_CASE("sampler and method names round trip") {
    for (Sampler s : {Sampler::RotosolveAngles, Sampler::RotoselectAxisAngle,
                      Sampler::FraxisParameterRandom, Sampler::FraxisStateRandom}) {
        CHECK(sampler_from_name(sampler_name(s)) == s);
    }
    CHECK_THROWS_AS(sampler_from_name("bogus"), std::invalid_argument);
}
