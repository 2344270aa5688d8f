// Shared oracles for the test suites. Everything here recomputes expected
// values through dense linear algebra, independent of the library's stride
// kernels and solvers.
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <vector>

#include "fraxis/circuit.hpp"
#include "fraxis/hamiltonian.hpp"
#include "fraxis/optimize.hpp"
#include "fraxis/rng.hpp"
#include "fraxis/statevector.hpp"

namespace oracle {

using Complex = std::complex<double>;

inline Eigen::VectorXcd to_eigen(const fraxis::StateVector& s) {
    Eigen::VectorXcd v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        v(i) = s.amplitude(i);
    }
    return v;
}

inline Eigen::Matrix2cd to_eigen(const fraxis::Unitary2& u) {
    Eigen::Matrix2cd m;
    m << u.u00, u.u01, u.u10, u.u11;
    return m;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

inline Eigen::Matrix2cd pauli_matrix(fraxis::Pauli p) {
    Eigen::Matrix2cd m;
    switch (p) {
        case fraxis::Pauli::I: m << 1, 0, 0, 1; break;
        case fraxis::Pauli::X: m << 0, 1, 1, 0; break;
        case fraxis::Pauli::Y: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
        case fraxis::Pauli::Z: m << 1, 0, 0, -1; break;
    }
    return m;
}

// Qubit 0 is the least significant bit: it sits rightmost in the kron chain.
inline Eigen::MatrixXcd one_qubit_operator(int n_qubits, int qubit,
                                           const Eigen::Matrix2cd& u) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (int q = n_qubits - 1; q >= 0; --q) {
        out = q == qubit ? kron(out, u)
                         : kron(out, Eigen::MatrixXcd(Eigen::Matrix2cd::Identity()));
    }
    return out;
}

inline Eigen::MatrixXcd entangler_operator(int n_qubits, fraxis::EntanglerKind kind, int control,
                                           int target) {
    const Eigen::Index dim = Eigen::Index(1) << n_qubits;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        const bool control_set = (col >> control) & 1;
        if (kind == fraxis::EntanglerKind::CX) {
            const Eigen::Index row = control_set ? (col ^ (Eigen::Index(1) << target)) : col;
            out(row, col) = 1.0;
        } else {
            const bool target_set = (col >> target) & 1;
            out(col, col) = (control_set && target_set) ? -1.0 : 1.0;
        }
    }
    return out;
}

inline Eigen::MatrixXcd circuit_operator(const fraxis::Circuit& c) {
    const Eigen::Index dim = Eigen::Index(1) << c.n_qubits();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(dim, dim);
    for (const fraxis::GateSlot& slot : c.slots()) {
        Eigen::MatrixXcd gate;
        if (const auto* param = std::get_if<fraxis::ParamGate>(&slot)) {
            gate = one_qubit_operator(c.n_qubits(), param->qubit,
                                      to_eigen(fraxis::rotation_unitary(param->axis,
                                                                        param->theta)));
        } else if (const auto* fixed = std::get_if<fraxis::FixedSlot>(&slot)) {
            gate = one_qubit_operator(c.n_qubits(), fixed->qubit,
                                      to_eigen(fraxis::fixed_gate_matrix(fixed->gate)));
        } else {
            const auto& ent = std::get<fraxis::EntanglerSlot>(slot);
            gate = entangler_operator(c.n_qubits(), ent.kind, ent.control, ent.target);
        }
        out = gate * out;
    }
    return out;
}

inline Eigen::MatrixXcd pauli_sum_matrix(const fraxis::PauliSum& m) {
    const Eigen::Index dim = Eigen::Index(1) << m.n_qubits();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (const fraxis::PauliTerm& term : m.terms()) {
        Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(1, 1);
        for (int q = m.n_qubits() - 1; q >= 0; --q) {
            acc = kron(acc, Eigen::MatrixXcd(pauli_matrix(term.ops[q])));
        }
        out += term.coeff * acc;
    }
    return out;
}

// exp(A) for 2x2 complex matrices by scaling and squaring with a Taylor tail.
inline Eigen::Matrix2cd expm(Eigen::Matrix2cd a) {
    int squarings = 0;
    while (a.cwiseAbs().maxCoeff() > 0.25) {
        a *= 0.5;
        ++squarings;
    }
    Eigen::Matrix2cd result = Eigen::Matrix2cd::Identity();
    Eigen::Matrix2cd term = Eigen::Matrix2cd::Identity();
    for (int k = 1; k <= 24; ++k) {
        term = (term * a) / static_cast<double>(k);
        result += term;
    }
    for (int k = 0; k < squarings; ++k) {
        result = result * result;
    }
    return result;
}

// |tr(A^dag B)| computed on Eigen matrices.
inline double abs_trace_overlap(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return std::abs((a.adjoint() * b).trace());
}

inline fraxis::Axis random_axis(fraxis::Rng& rng) {
    return fraxis::Axis::normalized(rng.normal(), rng.normal(), rng.normal());
}

inline fraxis::StateVector random_state(int n_qubits, fraxis::Rng& rng) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    std::vector<Complex> amplitudes(dim);
    double norm_sq = 0.0;
    for (Complex& a : amplitudes) {
        a = Complex(rng.normal(), rng.normal());
        norm_sq += std::norm(a);
    }
    const double scale = 1.0 / std::sqrt(norm_sq);
    for (Complex& a : amplitudes) {
        a *= scale;
    }
    return fraxis::StateVector(n_qubits, std::move(amplitudes));
}

inline fraxis::PauliSum random_pauli_sum(int n_qubits, int n_terms, fraxis::Rng& rng) {
    fraxis::PauliSum sum(n_qubits);
    for (int t = 0; t < n_terms; ++t) {
        fraxis::PauliString ops(n_qubits, fraxis::Pauli::I);
        for (int q = 0; q < n_qubits; ++q) {
            ops[q] = static_cast<fraxis::Pauli>(rng.below(4));
        }
        sum.add_term(rng.uniform(-1.0, 1.0), std::move(ops));
    }
    sum.normalize();
    return sum;
}

inline fraxis::Circuit random_circuit(int n_qubits, int layers, fraxis::Rng& rng) {
    fraxis::Circuit c(n_qubits);
    for (int layer = 0; layer < layers; ++layer) {
        for (int q = 0; q < n_qubits; ++q) {
            c.add_param(q, random_axis(rng), rng.angle());
        }
        for (int q = 0; q + 1 < n_qubits; ++q) {
            c.add_entangler(rng.below(2) == 0 ? fraxis::EntanglerKind::CX
                                              : fraxis::EntanglerKind::CZ,
                            q, q + 1);
        }
    }
    return c;
}

}  // namespace oracle
