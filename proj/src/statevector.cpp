#include "fraxis/statevector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fraxis {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_qubit(int qubit, int n_qubits) {
    if (qubit < 0 || qubit >= n_qubits) {
        throw std::invalid_argument("qubit index " + std::to_string(qubit) +
                                    " out of range for " + std::to_string(n_qubits) + " qubits");
    }
}

}  // namespace

void Axis::validate(double tol) const {
    const double norm_sq = x * x + y * y + z * z;
    if (std::abs(norm_sq - 1.0) > tol) {
        throw std::invalid_argument("axis is not unit-norm: |n|^2 = " + std::to_string(norm_sq));
    }
}

Axis Axis::normalized(double x, double y, double z) {
    const double norm = std::sqrt(x * x + y * y + z * z);
    if (norm < 1e-300) {
        throw std::invalid_argument("cannot normalize a zero axis");
    }
    return Axis{x / norm, y / norm, z / norm};
}

double Axis::dot(const Axis& other) const {
    return x * other.x + y * other.y + z * other.z;
}

Axis Axis::cross(const Axis& other) const {
    return Axis{y * other.z - z * other.y,
                z * other.x - x * other.z,
                x * other.y - y * other.x};
}

Unitary2 Unitary2::identity() {
    return Unitary2{1.0, 0.0, 0.0, 1.0};
}

Unitary2 Unitary2::dagger() const {
    return Unitary2{std::conj(u00), std::conj(u10), std::conj(u01), std::conj(u11)};
}

Unitary2 Unitary2::operator*(const Unitary2& rhs) const {
    return Unitary2{u00 * rhs.u00 + u01 * rhs.u10, u00 * rhs.u01 + u01 * rhs.u11,
                    u10 * rhs.u00 + u11 * rhs.u10, u10 * rhs.u01 + u11 * rhs.u11};
}

bool Unitary2::is_unitary(double tol) const {
    const Unitary2 p = dagger() * (*this);
    return std::abs(p.u00 - 1.0) <= tol && std::abs(p.u11 - 1.0) <= tol &&
           std::abs(p.u01) <= tol && std::abs(p.u10) <= tol;
}

double abs_trace_overlap(const Unitary2& a, const Unitary2& b) {
    const Unitary2 p = a.dagger() * b;
    return std::abs(p.u00 + p.u11);
}

Unitary2 rotation_unitary(const Axis& axis, double theta) {
    axis.validate();
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    // cos(t/2) I - i sin(t/2) (nx X + ny Y + nz Z)
    return Unitary2{c - kI * s * axis.z, s * (-axis.y - kI * axis.x),
                    s * (axis.y - kI * axis.x), c + kI * s * axis.z};
}

Unitary2 universal_unitary(double psi, double phi, double lam) {
    const double c = std::cos(psi / 2.0);
    const double s = std::sin(psi / 2.0);
    return Unitary2{c, -std::exp(kI * lam) * s,
                    std::exp(kI * phi) * s, std::exp(kI * (phi + lam)) * c};
}

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("n_qubits must be in [1, " + std::to_string(kMaxQubits) + "]");
    }
    amp_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
    amp_[0] = 1.0;
}

StateVector::StateVector(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amp_(std::move(amplitudes)) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("n_qubits must be in [1, " + std::to_string(kMaxQubits) + "]");
    }
    if (amp_.size() != (std::size_t{1} << n_qubits)) {
        throw std::invalid_argument("amplitude count does not match 2^n_qubits");
    }
    if (std::abs(norm_sq() - 1.0) > kInvariantTol) {
        throw std::invalid_argument("state vector is not normalized");
    }
}

void StateVector::apply_1q(int qubit, const Unitary2& u) {
    check_qubit(qubit, n_qubits_);
    const std::size_t stride = std::size_t{1} << qubit;
    const std::size_t dim = amp_.size();
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t offset = 0; offset < stride; ++offset) {
            const std::size_t i0 = block + offset;
            const std::size_t i1 = i0 + stride;
            const Complex a0 = amp_[i0];
            const Complex a1 = amp_[i1];
            amp_[i0] = u.u00 * a0 + u.u01 * a1;
            amp_[i1] = u.u10 * a0 + u.u11 * a1;
        }
    }
}

void StateVector::apply_cx(int control, int target) {
    check_qubit(control, n_qubits_);
    check_qubit(target, n_qubits_);
    if (control == target) {
        throw std::invalid_argument("control and target must differ");
    }
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t tmask = std::size_t{1} << target;
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        if ((i & cmask) && !(i & tmask)) {
            std::swap(amp_[i], amp_[i | tmask]);
        }
    }
}

void StateVector::apply_cz(int control, int target) {
    check_qubit(control, n_qubits_);
    check_qubit(target, n_qubits_);
    if (control == target) {
        throw std::invalid_argument("control and target must differ");
    }
    const std::size_t mask = (std::size_t{1} << control) | (std::size_t{1} << target);
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        if ((i & mask) == mask) {
            amp_[i] = -amp_[i];
        }
    }
}

double StateVector::norm_sq() const {
    double total = 0.0;
    for (const Complex& a : amp_) {
        total += std::norm(a);
    }
    return total;
}

Complex StateVector::inner(const StateVector& other) const {
    if (n_qubits_ != other.n_qubits_) {
        throw std::invalid_argument("state dimensions do not match");
    }
    Complex total{0.0, 0.0};
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        total += std::conj(amp_[i]) * other.amp_[i];
    }
    return total;
}

double fidelity(const StateVector& a, const StateVector& b) {
    return std::norm(a.inner(b));
}

}  // namespace fraxis
