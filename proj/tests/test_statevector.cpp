#include "doctest.h"

#include <cmath>

#include "fraxis/statevector.hpp"
#include "test_helpers.hpp"

using namespace fraxis;

namespace {
constexpr Complex kI{0.0, 1.0};
}

TEST_CASE("z rotation has the diagonal closed form") {
    for (double theta : {0.0, 0.3, -1.2, M_PI, 5.5}) {
        const Unitary2 u = rotation_unitary(Axis{0, 0, 1}, theta);
        CHECK(std::abs(u.u00 - std::exp(-kI * theta / 2.0)) < 1e-12);
        CHECK(std::abs(u.u11 - std::exp(kI * theta / 2.0)) < 1e-12);
        CHECK(std::abs(u.u01) < 1e-12);
        CHECK(std::abs(u.u10) < 1e-12);
    }
}

TEST_CASE("pi rotation about y is [[0,-1],[1,0]]") {
    const Unitary2 u = rotation_unitary(Axis{0, 1, 0}, M_PI);
    CHECK(std::abs(u.u00) < 1e-12);
    CHECK(std::abs(u.u01 + 1.0) < 1e-12);
    CHECK(std::abs(u.u10 - 1.0) < 1e-12);
    CHECK(std::abs(u.u11) < 1e-12);
}

TEST_CASE("rotation gate matches the matrix-exponential oracle") {
    const Axis axis = Axis::normalized(1, 1, 1);
    const double theta = 2.0 * M_PI / 3.0;
    const Unitary2 u = rotation_unitary(axis, theta);

    Eigen::Matrix2cd generator;
    generator << axis.z, Complex(axis.x, -axis.y), Complex(axis.x, axis.y), -axis.z;
    const Eigen::Matrix2cd expected = oracle::expm(Complex(0, -theta / 2.0) * generator);
    CHECK((oracle::to_eigen(u) - expected).cwiseAbs().maxCoeff() < 1e-9);

    // And across random axes/angles.
    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        const Axis a = oracle::random_axis(rng);
        const double t = rng.uniform(-2 * M_PI, 2 * M_PI);
        Eigen::Matrix2cd gen;
        gen << a.z, Complex(a.x, -a.y), Complex(a.x, a.y), -a.z;
        const Eigen::Matrix2cd want = oracle::expm(Complex(0, -t / 2.0) * gen);
        CHECK((oracle::to_eigen(rotation_unitary(a, t)) - want).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("non-unit axes are rejected") {
    CHECK_THROWS_AS(rotation_unitary(Axis{0.5, 0.5, 0.5}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Axis::normalized(0, 0, 0), std::invalid_argument);
}

TEST_CASE("universal gate special points") {
    const Unitary2 id = universal_unitary(0, 0, 0);
    CHECK(std::abs(id.u00 - 1.0) < 1e-12);
    CHECK(std::abs(id.u11 - 1.0) < 1e-12);
    CHECK(std::abs(id.u01) < 1e-12);

    // (pi, 0, pi) is the X gate, a pi rotation about x up to phase.
    const Unitary2 x_like = universal_unitary(M_PI, 0, M_PI);
    CHECK(std::abs(abs_trace_overlap(x_like, rotation_unitary(Axis{1, 0, 0}, M_PI)) - 2.0) <
          1e-9);

    CHECK(universal_unitary(M_PI / 2, M_PI / 2, M_PI / 2).is_unitary(1e-10));
}

TEST_CASE("single-qubit gate application on basis states") {
    StateVector s(2);
    s.apply_1q(0, Unitary2{0, 1, 1, 0});  // X on qubit 0: |00> -> |01>
    CHECK(std::abs(s.amplitude(1) - 1.0) < 1e-12);

    StateVector h(2);
    h.apply_1q(0, fixed_gate_matrix(FixedGate::H));
    CHECK(std::abs(h.amplitude(0) - 1.0 / std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(h.amplitude(1) - 1.0 / std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(h.amplitude(2)) < 1e-12);
}

TEST_CASE("single-qubit application matches the dense oracle") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        StateVector s = oracle::random_state(3, rng);
        const Unitary2 u = rotation_unitary(oracle::random_axis(rng), rng.angle());
        const int qubit = static_cast<int>(rng.below(3));

        const Eigen::VectorXcd expected =
            oracle::one_qubit_operator(3, qubit, oracle::to_eigen(u)) * oracle::to_eigen(s);
        s.apply_1q(qubit, u);
        CHECK((oracle::to_eigen(s) - expected).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("controlled gates on basis states") {
    StateVector s(2, {0, 0, 1, 0});  // |10>: qubit 1 set
    s.apply_cx(1, 0);
    CHECK(std::abs(s.amplitude(3) - 1.0) < 1e-12);  // -> |11>

    StateVector t(2, {0, 0, 0, 1});  // |11>
    t.apply_cz(0, 1);
    CHECK(std::abs(t.amplitude(3) + 1.0) < 1e-12);
}

TEST_CASE("controlled gates match the dense oracle") {
    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        StateVector s = oracle::random_state(4, rng);
        const int control = static_cast<int>(rng.below(4));
        int target = static_cast<int>(rng.below(4));
        while (target == control) {
            target = static_cast<int>(rng.below(4));
        }
        const EntanglerKind kind = rng.below(2) == 0 ? EntanglerKind::CX : EntanglerKind::CZ;
        const Eigen::VectorXcd expected =
            oracle::entangler_operator(4, kind, control, target) * oracle::to_eigen(s);
        if (kind == EntanglerKind::CX) {
            s.apply_cx(control, target);
        } else {
            s.apply_cz(control, target);
        }
        CHECK((oracle::to_eigen(s) - expected).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("controlled gate preconditions") {
    StateVector s(2);
    CHECK_THROWS_AS(s.apply_cx(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(s.apply_cx(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(s.apply_1q(5, Unitary2::identity()), std::invalid_argument);
}

TEST_CASE("state construction guards") {
    CHECK_THROWS_AS(StateVector(17), std::invalid_argument);
    CHECK_THROWS_AS(StateVector(2, {1.0, 0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(StateVector(1, {0.9, 0.0}), std::invalid_argument);
}

TEST_CASE("fidelity basics") {
    Rng rng(5);
    const StateVector s = oracle::random_state(3, rng);
    CHECK(fidelity(s, s) == doctest::Approx(1.0).epsilon(1e-12));

    const StateVector zero(1);
    const StateVector one(1, {0.0, 1.0});
    CHECK(fidelity(zero, one) == doctest::Approx(0.0).epsilon(1e-12));

    for (double theta : {0.2, 1.1, 2.9, -0.7}) {
        StateVector rotated(1);
        rotated.apply_1q(0, rotation_unitary(Axis{0, 1, 0}, theta));
        CHECK(fidelity(zero, rotated) ==
              doctest::Approx(std::cos(theta / 2) * std::cos(theta / 2)).epsilon(1e-10));
    }

    const StateVector other(2);
    CHECK_THROWS_AS(fidelity(zero, other), std::invalid_argument);
}

TEST_CASE("gates preserve the norm") {
    Rng rng(21);
    StateVector s = oracle::random_state(4, rng);
    for (int step = 0; step < 100; ++step) {
        s.apply_1q(static_cast<int>(rng.below(4)),
                   rotation_unitary(oracle::random_axis(rng), rng.angle()));
        if (step % 3 == 0) {
            s.apply_cx(static_cast<int>(rng.below(2)), 2 + static_cast<int>(rng.below(2)));
        }
        CHECK(std::abs(s.norm_sq() - 1.0) < 1e-10);
    }
}

TEST_CASE("pi rotations compose by cross and dot products") {
    Rng rng(31);
    int tested = 0;
    while (tested < 200) {
        const Axis a = oracle::random_axis(rng);
        const Axis b = oracle::random_axis(rng);
        if (std::abs(a.dot(b)) > 1.0 - 1e-6) {
            continue;
        }
        ++tested;
        const Axis cross = Axis::normalized(a.cross(b).x, a.cross(b).y, a.cross(b).z);
        const double angle = 2.0 * std::acos(std::clamp(-a.dot(b), -1.0, 1.0));
        const Unitary2 product = rotation_unitary(a, M_PI) * rotation_unitary(b, M_PI);
        CHECK(std::abs(abs_trace_overlap(product, rotation_unitary(cross, angle)) - 2.0) < 1e-9);
    }
}

TEST_CASE("two pi rotations realize any universal gate") {
    Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        const double psi = rng.uniform(-M_PI, M_PI);
        const double phi = rng.uniform(-M_PI, M_PI);
        const double lam = rng.uniform(-M_PI, M_PI);
        const Unitary2 target = universal_unitary(psi, phi, lam);

        // Recover (axis, angle) of the target, then split it in the normal plane.
        const Complex det = target.u00 * target.u11 - target.u01 * target.u10;
        const Complex phase = std::sqrt(det);
        const Complex a00 = target.u00 / phase, a01 = target.u01 / phase;
        const Complex a10 = target.u10 / phase, a11 = target.u11 / phase;
        const double cos_half = std::clamp(0.5 * (a00 + a11).real(), -1.0, 1.0);
        const double wx = -0.5 * (a01 + a10).imag();
        const double wy = 0.5 * (a10 - a01).real();
        const double wz = 0.5 * (a11 - a00).imag();
        const double sin_half = std::sqrt(wx * wx + wy * wy + wz * wz);
        const Axis axis = sin_half > 1e-12 ? Axis::normalized(wx, wy, wz) : Axis{0, 0, 1};
        const double theta = 2.0 * std::atan2(sin_half, cos_half);

        Axis seed{1, 0, 0};
        if (std::abs(axis.x) > 0.9) {
            seed = Axis{0, 1, 0};
        }
        const Axis u = Axis::normalized(axis.cross(seed).x, axis.cross(seed).y,
                                        axis.cross(seed).z);
        const Axis v = axis.cross(u);
        const double alpha = M_PI - theta / 2.0;
        const Axis second{std::cos(alpha) * u.x + std::sin(alpha) * v.x,
                          std::cos(alpha) * u.y + std::sin(alpha) * v.y,
                          std::cos(alpha) * u.z + std::sin(alpha) * v.z};
        const Unitary2 product = rotation_unitary(u, M_PI) * rotation_unitary(second, M_PI);
        CHECK(std::abs(abs_trace_overlap(product, target) - 2.0) < 1e-9);
    }
}
