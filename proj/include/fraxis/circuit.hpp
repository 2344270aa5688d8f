#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fraxis/hamiltonian.hpp"
#include "fraxis/statevector.hpp"

namespace fraxis {

enum class FixedGate { H, X, SX };
enum class EntanglerKind { CX, CZ };

/// Single-qubit rotation with a tunable axis and angle.
struct ParamGate {
    int qubit = 0;
    Axis axis{0.0, 1.0, 0.0};
    double theta = 0.0;
};

struct FixedSlot {
    int qubit = 0;
    FixedGate gate = FixedGate::H;
};

struct EntanglerSlot {
    EntanglerKind kind = EntanglerKind::CX;
    int control = 0;
    int target = 1;
};

using GateSlot = std::variant<ParamGate, FixedSlot, EntanglerSlot>;

/// Ordered gate slots applied to an initial state (|0...0> by default).
/// Param slots are addressed by slot index; optimizers update them in order.
class Circuit {
  public:
    explicit Circuit(int n_qubits);
    Circuit(int n_qubits, StateVector initial_state);

    int n_qubits() const { return n_qubits_; }
    const StateVector& initial_state() const { return initial_; }
    const std::vector<GateSlot>& slots() const { return slots_; }
    std::size_t size() const { return slots_.size(); }

    void add_param(int qubit);
    void add_param(int qubit, const Axis& axis, double theta);
    void add_fixed(int qubit, FixedGate gate);
    void add_entangler(EntanglerKind kind, int control, int target);

    /// Slot indices of all Param gates, in application order.
    std::vector<std::size_t> param_slots() const;

    /// Mutable access to a Param slot; throws if the slot holds another gate.
    ParamGate& param_at(std::size_t slot);
    const ParamGate& param_at(std::size_t slot) const;

  private:
    void check_qubit(int qubit) const;

    int n_qubits_;
    StateVector initial_;
    std::vector<GateSlot> slots_;
};

Unitary2 fixed_gate_matrix(FixedGate gate);

/// Applies all slots in order to the initial state.
StateVector evaluate(const Circuit& c);

/// expectation(m, evaluate(c)).
double energy(const Circuit& c, const PauliSum& m);

/// Energy with the Param gate at `slot` replaced by `u`; the circuit itself
/// is left untouched. This is the measurement primitive behind every
/// single-gate landscape estimate.
double energy_with_substitution(const Circuit& c, const PauliSum& m, std::size_t slot,
                                const Unitary2& u);

// Benchmark ansatz builders. Param gates default to the y axis with theta 0;
// optimizers and samplers randomize them. Slot order is the update order:
// within a layer ascending by qubit, layers front to back.
Circuit two_qubit_ansatz();
Circuit circuit_a(int layers);
Circuit circuit_b(int layers);
Circuit qubo_ansatz();
Circuit relax_ansatz();
Circuit single_qubit_ansatz();

/// One element of the native-gate expansion of a pi rotation.
struct NativeGate {
    enum class Kind { RZ, SX } kind = Kind::RZ;
    double angle = 0.0;  // meaningful for RZ only
};

/// Expands a pi rotation about `axis` into Rz/sqrt(X) gates, returned in
/// application order; the composed product matches rotation_unitary(axis, pi)
/// up to global phase.
std::array<NativeGate, 5> decompose_pi_fraxis(const Axis& axis);

/// Matrix product of a native sequence (first element applied first).
Unitary2 compose_native(const std::array<NativeGate, 5>& gates);

// Circuit files: one slot per line, '#' comments.
//   qubits <n>
//   param <qubit> <nx> <ny> <nz> <theta>
//   fixed <qubit> <H|X|SX>
//   cx <control> <target>
//   cz <control> <target>
std::string serialize_circuit(const Circuit& c);
Circuit parse_circuit(std::string_view text);
Circuit load_circuit(const std::string& path);
void save_circuit(const Circuit& c, const std::string& path);

}  // namespace fraxis
