#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace fraxis {

using Complex = std::complex<double>;

/// Dense simulation is capped well past every built-in experiment (<= 10 qubits).
inline constexpr int kMaxQubits = 16;

/// Tolerance for invariants on analytic constructions (norms, unitarity).
inline constexpr double kInvariantTol = 1e-10;

/// Unit vector on the Bloch sphere; the rotation axis of a single-qubit gate.
struct Axis {
    double x = 0.0;
    double y = 0.0;
    double z = 1.0;

    /// Throws std::invalid_argument when the norm is off unity by more than tol.
    void validate(double tol = kInvariantTol) const;

    /// Builds a unit axis from an arbitrary non-zero vector.
    static Axis normalized(double x, double y, double z);

    double dot(const Axis& other) const;
    Axis cross(const Axis& other) const;
};

/// Row-major 2x2 complex matrix; gates are checked unitary where required.
struct Unitary2 {
    Complex u00, u01, u10, u11;

    static Unitary2 identity();
    Unitary2 dagger() const;
    Unitary2 operator*(const Unitary2& rhs) const;
    bool is_unitary(double tol = kInvariantTol) const;
};

/// |tr(A^dagger B)|; equals 2 exactly when A and B agree up to global phase.
double abs_trace_overlap(const Unitary2& a, const Unitary2& b);

/// cos(theta/2) I - i sin(theta/2) (n.sigma); rotation by theta about `axis`.
Unitary2 rotation_unitary(const Axis& axis, double theta);

/// General single-qubit gate:
///   [ cos(psi/2)              -e^{i lam} sin(psi/2)      ]
///   [ e^{i phi} sin(psi/2)     e^{i(phi+lam)} cos(psi/2) ]
Unitary2 universal_unitary(double psi, double phi, double lam);

/// Normalized amplitudes over 2^n basis states, qubit 0 = least significant bit.
class StateVector {
  public:
    /// |0...0> on n qubits.
    explicit StateVector(int n_qubits);

    /// Takes ownership of amplitudes; validates length and norm.
    StateVector(int n_qubits, std::vector<Complex> amplitudes);

    int n_qubits() const { return n_qubits_; }
    std::size_t size() const { return amp_.size(); }
    const std::vector<Complex>& amplitudes() const { return amp_; }
    Complex amplitude(std::size_t index) const { return amp_[index]; }

    void apply_1q(int qubit, const Unitary2& u);
    void apply_cx(int control, int target);
    void apply_cz(int control, int target);

    double norm_sq() const;
    Complex inner(const StateVector& other) const;

    /// Direct amplitude access for module-internal kernels.
    std::vector<Complex>& raw() { return amp_; }

  private:
    int n_qubits_;
    std::vector<Complex> amp_;
};

/// |<a|b>|^2; symmetric and insensitive to global phases.
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace fraxis
