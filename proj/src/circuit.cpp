#include "fraxis/circuit.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fraxis {

namespace {

constexpr Complex kI{0.0, 1.0};

void apply_slot(StateVector& state, const GateSlot& slot) {
    if (const auto* param = std::get_if<ParamGate>(&slot)) {
        state.apply_1q(param->qubit, rotation_unitary(param->axis, param->theta));
    } else if (const auto* fixed = std::get_if<FixedSlot>(&slot)) {
        state.apply_1q(fixed->qubit, fixed_gate_matrix(fixed->gate));
    } else {
        const auto& ent = std::get<EntanglerSlot>(slot);
        if (ent.kind == EntanglerKind::CX) {
            state.apply_cx(ent.control, ent.target);
        } else {
            state.apply_cz(ent.control, ent.target);
        }
    }
}

}  // namespace

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits), initial_(n_qubits) {}

Circuit::Circuit(int n_qubits, StateVector initial_state)
    : n_qubits_(n_qubits), initial_(std::move(initial_state)) {
    if (initial_.n_qubits() != n_qubits_) {
        throw std::invalid_argument("initial state dimension does not match circuit");
    }
}

void Circuit::check_qubit(int qubit) const {
    if (qubit < 0 || qubit >= n_qubits_) {
        throw std::invalid_argument("qubit index out of range for circuit");
    }
}

void Circuit::add_param(int qubit) {
    add_param(qubit, Axis{0.0, 1.0, 0.0}, 0.0);
}

void Circuit::add_param(int qubit, const Axis& axis, double theta) {
    check_qubit(qubit);
    axis.validate();
    slots_.push_back(ParamGate{qubit, axis, theta});
}

void Circuit::add_fixed(int qubit, FixedGate gate) {
    check_qubit(qubit);
    slots_.push_back(FixedSlot{qubit, gate});
}

void Circuit::add_entangler(EntanglerKind kind, int control, int target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw std::invalid_argument("entangler control and target must differ");
    }
    slots_.push_back(EntanglerSlot{kind, control, target});
}

std::vector<std::size_t> Circuit::param_slots() const {
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < slots_.size(); ++i) {
        if (std::holds_alternative<ParamGate>(slots_[i])) {
            indices.push_back(i);
        }
    }
    return indices;
}

ParamGate& Circuit::param_at(std::size_t slot) {
    if (slot >= slots_.size() || !std::holds_alternative<ParamGate>(slots_[slot])) {
        throw std::invalid_argument("slot does not hold a Param gate");
    }
    return std::get<ParamGate>(slots_[slot]);
}

const ParamGate& Circuit::param_at(std::size_t slot) const {
    if (slot >= slots_.size() || !std::holds_alternative<ParamGate>(slots_[slot])) {
        throw std::invalid_argument("slot does not hold a Param gate");
    }
    return std::get<ParamGate>(slots_[slot]);
}

Unitary2 fixed_gate_matrix(FixedGate gate) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    switch (gate) {
        case FixedGate::H:
            return Unitary2{inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2};
        case FixedGate::X:
            return Unitary2{0.0, 1.0, 1.0, 0.0};
        case FixedGate::SX:
            return Unitary2{0.5 * Complex{1.0, 1.0}, 0.5 * Complex{1.0, -1.0},
                            0.5 * Complex{1.0, -1.0}, 0.5 * Complex{1.0, 1.0}};
    }
    throw std::logic_error("unknown fixed gate");
}

StateVector evaluate(const Circuit& c) {
    StateVector state = c.initial_state();
    for (const GateSlot& slot : c.slots()) {
        apply_slot(state, slot);
    }
    return state;
}

double energy(const Circuit& c, const PauliSum& m) {
    return expectation(m, evaluate(c));
}

double energy_with_substitution(const Circuit& c, const PauliSum& m, std::size_t slot,
                                const Unitary2& u) {
    const ParamGate& param = c.param_at(slot);
    if (!u.is_unitary()) {
        throw std::invalid_argument("substituted gate is not unitary");
    }
    StateVector state = c.initial_state();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i == slot) {
            state.apply_1q(param.qubit, u);
        } else {
            apply_slot(state, c.slots()[i]);
        }
    }
    return expectation(m, state);
}

Circuit two_qubit_ansatz() {
    Circuit c(2);
    c.add_param(0);
    c.add_param(1);
    c.add_entangler(EntanglerKind::CX, 0, 1);
    c.add_param(0);
    c.add_param(1);
    return c;
}

Circuit circuit_a(int layers) {
    if (layers < 1) {
        throw std::invalid_argument("circuit_a requires layers >= 1");
    }
    Circuit c(5);
    for (int layer = 0; layer < layers; ++layer) {
        for (int q = 0; q < 5; ++q) {
            c.add_param(q);
        }
        // Two entangling columns per layer, as drawn.
        c.add_entangler(EntanglerKind::CZ, 0, 1);
        c.add_entangler(EntanglerKind::CZ, 2, 3);
        c.add_entangler(EntanglerKind::CZ, 1, 2);
        c.add_entangler(EntanglerKind::CZ, 3, 4);
    }
    for (int q = 0; q < 5; ++q) {
        c.add_param(q);
    }
    return c;
}

Circuit circuit_b(int layers) {
    if (layers < 1) {
        throw std::invalid_argument("circuit_b requires layers >= 1");
    }
    Circuit c(6);
    c.add_fixed(0, FixedGate::X);
    c.add_fixed(3, FixedGate::X);
    for (int layer = 0; layer < layers; ++layer) {
        for (int q = 0; q < 6; ++q) {
            c.add_param(q);
        }
        c.add_entangler(EntanglerKind::CZ, 0, 1);
        c.add_entangler(EntanglerKind::CZ, 1, 2);
        c.add_entangler(EntanglerKind::CZ, 3, 4);
        c.add_entangler(EntanglerKind::CZ, 4, 5);
        c.add_entangler(EntanglerKind::CZ, 0, 3);
    }
    for (int q = 0; q < 6; ++q) {
        c.add_param(q);
    }
    return c;
}

Circuit qubo_ansatz() {
    Circuit c(10);
    for (int q = 0; q < 10; ++q) {
        c.add_fixed(q, FixedGate::H);
    }
    for (int q = 0; q < 10; ++q) {
        c.add_entangler(EntanglerKind::CX, q, (q + 1) % 10);
    }
    for (int q = 0; q < 10; ++q) {
        c.add_param(q);
    }
    return c;
}

Circuit relax_ansatz() {
    Circuit c(4);
    for (int q = 0; q < 4; ++q) {
        c.add_param(q);
    }
    for (int q = 0; q < 4; ++q) {
        c.add_entangler(EntanglerKind::CZ, q, (q + 1) % 4);
    }
    for (int q = 0; q < 4; ++q) {
        c.add_param(q);
    }
    return c;
}

Circuit single_qubit_ansatz() {
    Circuit c(1);
    c.add_param(0);
    return c;
}

std::array<NativeGate, 5> decompose_pi_fraxis(const Axis& axis) {
    axis.validate();
    const double radial = std::hypot(axis.x, axis.y);
    const double phi = (radial < 1e-300) ? 0.0 : std::atan2(axis.y, axis.x);
    const double polar2 = 2.0 * std::atan2(radial, axis.z);
    // Application order; the matrix product reads right to left.
    return {NativeGate{NativeGate::Kind::RZ, M_PI - phi},
            NativeGate{NativeGate::Kind::SX, 0.0},
            NativeGate{NativeGate::Kind::RZ, M_PI + polar2},
            NativeGate{NativeGate::Kind::SX, 0.0},
            NativeGate{NativeGate::Kind::RZ, M_PI + phi}};
}

Unitary2 compose_native(const std::array<NativeGate, 5>& gates) {
    Unitary2 product = Unitary2::identity();
    for (const NativeGate& gate : gates) {
        Unitary2 u = fixed_gate_matrix(FixedGate::SX);
        if (gate.kind == NativeGate::Kind::RZ) {
            u = Unitary2{std::exp(-kI * gate.angle / 2.0), 0.0,
                         0.0, std::exp(kI * gate.angle / 2.0)};
        }
        product = u * product;
    }
    return product;
}

std::string serialize_circuit(const Circuit& c) {
    std::ostringstream out;
    out.precision(17);
    out << "qubits " << c.n_qubits() << '\n';
    for (const GateSlot& slot : c.slots()) {
        if (const auto* param = std::get_if<ParamGate>(&slot)) {
            out << "param " << param->qubit << ' ' << param->axis.x << ' ' << param->axis.y
                << ' ' << param->axis.z << ' ' << param->theta << '\n';
        } else if (const auto* fixed = std::get_if<FixedSlot>(&slot)) {
            const char* name = fixed->gate == FixedGate::H ? "H"
                               : fixed->gate == FixedGate::X ? "X"
                                                             : "SX";
            out << "fixed " << fixed->qubit << ' ' << name << '\n';
        } else {
            const auto& ent = std::get<EntanglerSlot>(slot);
            out << (ent.kind == EntanglerKind::CX ? "cx " : "cz ") << ent.control << ' '
                << ent.target << '\n';
        }
    }
    return out.str();
}

Circuit parse_circuit(std::string_view text) {
    std::istringstream stream{std::string(text)};
    std::string line;
    int line_number = 0;
    std::optional<Circuit> circuit;
    while (std::getline(stream, line)) {
        ++line_number;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::string keyword;
        if (!(fields >> keyword)) {
            continue;
        }
        try {
            if (keyword == "qubits") {
                int n = 0;
                if (!(fields >> n)) {
                    throw std::invalid_argument("expected qubit count");
                }
                if (circuit) {
                    throw std::invalid_argument("duplicate qubits line");
                }
                circuit.emplace(n);
                continue;
            }
            if (!circuit) {
                throw std::invalid_argument("first line must be 'qubits <n>'");
            }
            if (keyword == "param") {
                int qubit = 0;
                double nx = 0, ny = 0, nz = 0, theta = 0;
                if (!(fields >> qubit >> nx >> ny >> nz >> theta)) {
                    throw std::invalid_argument("expected 'param <qubit> <nx> <ny> <nz> <theta>'");
                }
                circuit->add_param(qubit, Axis::normalized(nx, ny, nz), theta);
            } else if (keyword == "fixed") {
                int qubit = 0;
                std::string name;
                if (!(fields >> qubit >> name)) {
                    throw std::invalid_argument("expected 'fixed <qubit> <H|X|SX>'");
                }
                FixedGate gate;
                if (name == "H") gate = FixedGate::H;
                else if (name == "X") gate = FixedGate::X;
                else if (name == "SX") gate = FixedGate::SX;
                else throw std::invalid_argument("unknown fixed gate '" + name + "'");
                circuit->add_fixed(qubit, gate);
            } else if (keyword == "cx" || keyword == "cz") {
                int control = 0, target = 0;
                if (!(fields >> control >> target)) {
                    throw std::invalid_argument("expected '<control> <target>'");
                }
                circuit->add_entangler(keyword == "cx" ? EntanglerKind::CX : EntanglerKind::CZ,
                                       control, target);
            } else {
                throw std::invalid_argument("unknown keyword '" + keyword + "'");
            }
        } catch (const std::invalid_argument& err) {
            throw ParseError(err.what(), line_number);
        }
    }
    if (!circuit) {
        throw ParseError("empty circuit file", std::max(line_number, 1));
    }
    return *circuit;
}

Circuit load_circuit(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_circuit(buffer.str());
}

void save_circuit(const Circuit& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write file: " + path);
    }
    out << serialize_circuit(c);
}

}  // namespace fraxis
