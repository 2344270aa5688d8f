#include "doctest.h"

#include <cmath>
#include <numeric>

#include "fraxis/hamiltonian.hpp"
#include "test_helpers.hpp"

using namespace fraxis;

namespace {

StateVector basis_state(int n_qubits, std::size_t index) {
    std::vector<Complex> amplitudes(std::size_t{1} << n_qubits, Complex{0, 0});
    amplitudes[index] = 1.0;
    return StateVector(n_qubits, std::move(amplitudes));
}

StateVector singlet() {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    // (|01> - |10>)/sqrt2 with qubit 0 least significant.
    return StateVector(2, {0.0, inv_sqrt2, -inv_sqrt2, 0.0});
}

}  // namespace

TEST_CASE("expectation on simple states") {
    PauliSum z(1);
    z.add_term(1.0, "Z");
    CHECK(expectation(z, StateVector(1)) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK(expectation(two_qubit_model(), singlet()) == doctest::Approx(-0.3).epsilon(1e-12));

    PauliSum wrong(3);
    wrong.add_term(1.0, "ZZZ");
    CHECK_THROWS_AS(expectation(wrong, StateVector(2)), std::invalid_argument);
}

TEST_CASE("expectation matches the dense quadratic form") {
    Rng rng(101);
    for (int trial = 0; trial < 25; ++trial) {
        const PauliSum m = oracle::random_pauli_sum(3, 5, rng);
        const StateVector s = oracle::random_state(3, rng);
        const Eigen::VectorXcd v = oracle::to_eigen(s);
        const double expected = (v.adjoint() * oracle::pauli_sum_matrix(m) * v)(0).real();
        CHECK(expectation(m, s) == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("shot expectation of a deterministic observable") {
    PauliSum z(1);
    z.add_term(1.0, "Z");
    CHECK(shot_expectation(z, StateVector(1), 3, 99) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(shot_expectation(z, StateVector(1), 100000, 1) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(shot_expectation(z, StateVector(1), 0, 1), std::invalid_argument);
}

TEST_CASE("shot expectation of a balanced observable stays near zero") {
    PauliSum x(1);
    x.add_term(1.0, "X");
    // 3 sigma for 1e5 Bernoulli shots is just under 0.01.
    const double estimate = shot_expectation(x, StateVector(1), 100000, 7);
    CHECK(std::abs(estimate) < 0.02);
}

TEST_CASE("shot expectation converges on the two-qubit model ground state") {
    const PauliSum model = two_qubit_model();
    const double estimate = shot_expectation(model, singlet(), 1000000, 21);
    CHECK(std::abs(estimate - (-0.3)) < 0.01);
}

TEST_CASE("shot expectation is unbiased") {
    const PauliSum model = two_qubit_model();
    Rng rng(555);
    const StateVector state = oracle::random_state(2, rng);
    const double exact = expectation(model, state);

    const int repeats = 100;
    std::vector<double> estimates;
    for (int k = 0; k < repeats; ++k) {
        estimates.push_back(shot_expectation(model, state, 10000, 1000 + k));
    }
    const double mean = std::accumulate(estimates.begin(), estimates.end(), 0.0) / repeats;
    double var = 0.0;
    for (double e : estimates) {
        var += (e - mean) * (e - mean);
    }
    var /= repeats - 1;
    const double stderr_mean = std::sqrt(var / repeats);
    CHECK(std::abs(mean - exact) < 4.0 * std::max(stderr_mean, 1e-6));
}

TEST_CASE("ground energy oracle") {
    PauliSum xyz(1);
    xyz.add_term(1.0, "X");
    xyz.add_term(1.0, "Y");
    xyz.add_term(1.0, "Z");
    const GroundState g = ground_energy(xyz);
    CHECK(g.energy == doctest::Approx(-std::sqrt(3.0)).epsilon(1e-12));
    CHECK(expectation(xyz, g.state) == doctest::Approx(-std::sqrt(3.0)).epsilon(1e-10));

    CHECK(ground_energy(two_qubit_model()).energy == doctest::Approx(-0.3).epsilon(1e-12));

    CHECK(ground_energy(heisenberg_1d(2, 1.0, 0.0, false)).energy ==
          doctest::Approx(-3.0).epsilon(1e-12));

    CHECK_THROWS_AS(ground_energy(PauliSum(11)), std::invalid_argument);
}

TEST_CASE("heisenberg chain construction") {
    const PauliSum ring = heisenberg_1d(5, 1.0, 1.0, true);
    CHECK(ring.n_qubits() == 5);
    CHECK(ring.terms().size() == 20);  // 15 coupling + 5 field

    const PauliSum bond = heisenberg_1d(2, 1.0, 0.0, false);
    CHECK(bond.terms().size() == 3);
    for (const PauliTerm& term : bond.terms()) {
        CHECK(term.coeff == doctest::Approx(1.0));
        CHECK(term.ops[0] == term.ops[1]);
    }

    CHECK_THROWS_AS(heisenberg_1d(1, 1.0, 1.0, true), std::invalid_argument);

    // Library eigensolve against the test-side dense minimum.
    const Eigen::MatrixXcd dense = oracle::pauli_sum_matrix(ring);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense);
    CHECK(ground_energy(ring).energy ==
          doctest::Approx(solver.eigenvalues().minCoeff()).epsilon(1e-10));
}

TEST_CASE("heisenberg commutes with total-Z parity") {
    for (int n = 2; n <= 4; ++n) {
        const PauliSum h = heisenberg_1d(n, 1.0, 1.0, true);
        PauliSum parity(n);
        parity.add_term(1.0, PauliString(n, Pauli::Z));
        const Eigen::MatrixXcd hm = oracle::pauli_sum_matrix(h);
        const Eigen::MatrixXcd pm = oracle::pauli_sum_matrix(parity);
        CHECK((hm * pm - pm * hm).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("qubo hamiltonian structure") {
    Graph edge;
    edge.n_vertices = 2;
    edge.add_edge(0, 1);
    const PauliSum single = maxcut_qubo(edge);
    REQUIRE(single.terms().size() == 2);
    CHECK(single.terms()[0].ops == PauliString{Pauli::I, Pauli::I});
    CHECK(single.terms()[0].coeff == doctest::Approx(0.5));
    CHECK(single.terms()[1].ops == PauliString{Pauli::Z, Pauli::Z});
    CHECK(single.terms()[1].coeff == doctest::Approx(-0.5));

    const PauliSum petersen = maxcut_qubo(Graph::petersen());
    CHECK(petersen.n_qubits() == 10);
    CHECK(petersen.terms().size() == 16);
    int zz_terms = 0;
    for (const PauliTerm& term : petersen.terms()) {
        const int weight = static_cast<int>(std::count(term.ops.begin(), term.ops.end(),
                                                       Pauli::Z));
        if (weight == 2) {
            ++zz_terms;
            CHECK(term.coeff == doctest::Approx(-0.5));
        } else {
            CHECK(weight == 0);
            CHECK(term.coeff == doctest::Approx(7.5));
        }
    }
    CHECK(zz_terms == 15);
}

TEST_CASE("qubo expectation on basis states equals the cut") {
    const Graph g = Graph::petersen();
    const PauliSum h = maxcut_qubo(g);
    for (std::size_t index = 0; index < 1024; index += 7) {
        std::vector<int> assignment(10);
        for (int v = 0; v < 10; ++v) {
            assignment[v] = (index >> v) & 1 ? -1 : 1;
        }
        CHECK(expectation(h, basis_state(10, index)) ==
              doctest::Approx(cut_value(g, assignment)).epsilon(1e-10));
    }
}

TEST_CASE("relaxation hamiltonian structure") {
    Graph edge;
    edge.n_vertices = 2;
    edge.add_edge(0, 1);
    const PauliSum single = maxcut_relax(edge, {{0, Pauli::X}, {1, Pauli::Z}});
    REQUIRE(single.terms().size() == 2);
    CHECK(single.terms()[0].ops == PauliString{Pauli::I, Pauli::I});
    CHECK(single.terms()[0].coeff == doctest::Approx(0.5));
    CHECK(single.terms()[1].ops == PauliString{Pauli::X, Pauli::Z});
    CHECK(single.terms()[1].coeff == doctest::Approx(-1.5));

    const PauliSum relax = maxcut_relax(Graph::petersen(), petersen_relax_labels());
    CHECK(relax.n_qubits() == 4);
    CHECK(relax.terms().size() == 16);
    double identity_coeff = 0.0;
    int couplings = 0;
    for (const PauliTerm& term : relax.terms()) {
        const bool is_identity =
            std::all_of(term.ops.begin(), term.ops.end(), [](Pauli p) { return p == Pauli::I; });
        if (is_identity) {
            identity_coeff = term.coeff;
        } else {
            ++couplings;
            CHECK(term.coeff == doctest::Approx(-1.5));
        }
    }
    CHECK(identity_coeff == doctest::Approx(7.5));
    CHECK(couplings == 15);
}

TEST_CASE("relaxation maximum dominates the optimal cut") {
    const PauliSum relax = maxcut_relax(Graph::petersen(), petersen_relax_labels());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(oracle::pauli_sum_matrix(relax));
    const int optimum = max_cut_brute_force(Graph::petersen()).best_cut;
    CHECK(solver.eigenvalues().maxCoeff() >= static_cast<double>(optimum) - 1e-9);
}

TEST_CASE("relaxation label validation") {
    Graph edge;
    edge.n_vertices = 2;
    edge.add_edge(0, 1);
    // Two vertices on one qubit with distinct letters multiply to an
    // imaginary-weight Pauli, which is an invalid labeling.
    CHECK_THROWS_AS(maxcut_relax(edge, {{0, Pauli::X}, {0, Pauli::Y}}), std::invalid_argument);
    // Sharing the exact (qubit, letter) pair is rejected outright.
    CHECK_THROWS_AS(maxcut_relax(edge, {{0, Pauli::X}, {0, Pauli::X}}), std::invalid_argument);
    CHECK_THROWS_AS(maxcut_relax(edge, {{0, Pauli::X}}), std::invalid_argument);
    CHECK_THROWS_AS(maxcut_relax(edge, {{0, Pauli::I}, {1, Pauli::X}}), std::invalid_argument);
}

TEST_CASE("cut values and the brute-force oracle") {
    const Graph g = Graph::petersen();
    CHECK(cut_value(g, std::vector<int>(10, 1)) == 0);

    Graph edge;
    edge.n_vertices = 2;
    edge.add_edge(0, 1);
    CHECK(cut_value(edge, {1, -1}) == 1);

    const BruteForceCut best = max_cut_brute_force(g);
    CHECK(best.best_cut == 12);
    CHECK(cut_value(g, best.assignment) == 12);

    CHECK_THROWS_AS(cut_value(g, {1, -1}), std::invalid_argument);
}

TEST_CASE("graph invariants") {
    Graph g;
    g.n_vertices = 3;
    g.add_edge(2, 0);
    CHECK(g.edges.front() == std::pair<int, int>{0, 2});
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 5), std::invalid_argument);

    const Graph petersen = Graph::petersen();
    CHECK(petersen.n_vertices == 10);
    CHECK(petersen.edges.size() == 15);
}

TEST_CASE("pauli sum text round trips") {
    const PauliSum parsed = parse_pauli_sum("0.1 XX\n0.01 IZ\n");
    CHECK(parsed.n_qubits() == 2);
    CHECK(parsed.terms().size() == 2);

    const PauliSum model = two_qubit_model();
    CHECK(parse_pauli_sum(serialize_pauli_sum(model)) == model);

    const PauliSum merged = parse_pauli_sum("1.0 Z\n2.0 Z\n");
    REQUIRE(merged.terms().size() == 1);
    CHECK(merged.terms()[0].coeff == doctest::Approx(3.0));

    const PauliSum commented = parse_pauli_sum("# comment\n\n0.5 XY  # trailing\n");
    CHECK(commented.terms().size() == 1);
}

TEST_CASE("pauli sum parse errors carry line numbers") {
    try {
        parse_pauli_sum("0.1 XX\nbogus line\n");
        FAIL("expected a parse error");
    } catch (const ParseError& err) {
        CHECK(err.line == 2);
    }
    CHECK_THROWS_AS(parse_pauli_sum("0.1 XQ\n"), ParseError);
    CHECK_THROWS_AS(parse_pauli_sum("1.0 X extra\n"), ParseError);
    CHECK_THROWS_AS(parse_pauli_sum("0.1 XX\n0.2 X\n"), ParseError);
    CHECK_THROWS_AS(parse_pauli_sum(""), ParseError);
}

TEST_CASE("graph text round trips") {
    const Graph g = Graph::petersen();
    const Graph parsed = parse_graph(serialize_graph(g));
    CHECK(parsed.n_vertices == g.n_vertices);
    CHECK(parsed.edges == g.edges);

    try {
        parse_graph("3\n0 1\n0 1\n");
        FAIL("expected a parse error");
    } catch (const ParseError& err) {
        CHECK(err.line == 3);
    }
    CHECK_THROWS_AS(parse_graph(""), ParseError);
}

TEST_CASE("label files") {
    const std::string text = "0 0 X\n1 1 Z\n";
    const std::vector<VertexLabel> labels = parse_labels(text, 2);
    CHECK(labels[0].qubit == 0);
    CHECK(labels[0].op == Pauli::X);
    CHECK(labels[1].op == Pauli::Z);
    CHECK_THROWS_AS(parse_labels("0 0 X\n", 2), ParseError);
    CHECK_THROWS_AS(parse_labels("0 0 I\n1 0 X\n", 2), ParseError);
    CHECK_THROWS_AS(parse_labels("0 0 X\n0 1 Y\n", 2), ParseError);
}
