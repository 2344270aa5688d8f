#include "fraxis/hamiltonian.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "fraxis/rng.hpp"

namespace fraxis {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_dimensions(const PauliSum& m, const StateVector& s) {
    if (m.n_qubits() != s.n_qubits()) {
        throw std::invalid_argument("Hamiltonian and state dimensions do not match");
    }
}

struct TermMasks {
    std::uint64_t flip = 0;   // X or Y letters
    std::uint64_t phase = 0;  // Y or Z letters
    int y_count = 0;
    std::uint64_t support = 0;  // non-I letters
};

TermMasks term_masks(const PauliString& ops) {
    TermMasks masks;
    for (std::size_t q = 0; q < ops.size(); ++q) {
        const std::uint64_t bit = std::uint64_t{1} << q;
        switch (ops[q]) {
            case Pauli::I:
                break;
            case Pauli::X:
                masks.flip |= bit;
                masks.support |= bit;
                break;
            case Pauli::Y:
                masks.flip |= bit;
                masks.phase |= bit;
                masks.support |= bit;
                ++masks.y_count;
                break;
            case Pauli::Z:
                masks.phase |= bit;
                masks.support |= bit;
                break;
        }
    }
    return masks;
}

// <s|P|s> for a single Pauli string, accumulated in one pass:
// P|j> = i^{#Y} (-1)^{popcount(j & phase)} |j ^ flip>.
Complex term_expectation(const PauliString& ops, const std::vector<Complex>& amp) {
    const TermMasks masks = term_masks(ops);
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < amp.size(); ++j) {
        const double sign = (std::popcount(j & masks.phase) & 1) ? -1.0 : 1.0;
        acc += sign * std::conj(amp[j ^ masks.flip]) * amp[j];
    }
    switch (masks.y_count & 3) {
        case 0: return acc;
        case 1: return kI * acc;
        case 2: return -acc;
        default: return -kI * acc;
    }
}

const Eigen::Matrix2cd& pauli_matrix(Pauli p) {
    static const Eigen::Matrix2cd mats[4] = {
        (Eigen::Matrix2cd() << 1, 0, 0, 1).finished(),
        (Eigen::Matrix2cd() << 0, 1, 1, 0).finished(),
        (Eigen::Matrix2cd() << 0, Complex{0, -1}, Complex{0, 1}, 0).finished(),
        (Eigen::Matrix2cd() << 1, 0, 0, -1).finished(),
    };
    return mats[static_cast<int>(p)];
}

Eigen::MatrixXcd dense_matrix(const PauliSum& m) {
    const std::size_t dim = std::size_t{1} << m.n_qubits();
    Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(dim, dim);
    for (const PauliTerm& term : m.terms()) {
        // Qubit 0 is the least significant bit, so it is the rightmost kron factor.
        Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(1, 1);
        for (int q = m.n_qubits() - 1; q >= 0; --q) {
            const Eigen::Matrix2cd& p = pauli_matrix(term.ops[q]);
            Eigen::MatrixXcd next(acc.rows() * 2, acc.cols() * 2);
            next << p(0, 0) * acc, p(0, 1) * acc, p(1, 0) * acc, p(1, 1) * acc;
            acc = std::move(next);
        }
        total += term.coeff * acc;
    }
    return total;
}

// Multiplies two single-qubit Paulis: a * b = weight * out.
void pauli_product(Pauli a, Pauli b, Pauli& out, Complex& weight) {
    if (a == Pauli::I) { out = b; weight = 1.0; return; }
    if (b == Pauli::I) { out = a; weight = 1.0; return; }
    if (a == b) { out = Pauli::I; weight = 1.0; return; }
    const int ai = static_cast<int>(a), bi = static_cast<int>(b);
    // XY=iZ, YZ=iX, ZX=iY; reversed order flips the sign.
    out = static_cast<Pauli>(6 - ai - bi);
    const bool forward = (bi - ai + 3) % 3 == 1;
    weight = forward ? kI : -kI;
}

bool is_blank_or_comment(std::string_view line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::string strip_comment(std::string_view line) {
    const std::size_t pos = line.find('#');
    return std::string(line.substr(0, pos));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write file: " + path);
    }
    out << text;
}

}  // namespace

char pauli_letter(Pauli p) {
    return "IXYZ"[static_cast<int>(p)];
}

Pauli pauli_from_letter(char c) {
    switch (c) {
        case 'I': return Pauli::I;
        case 'X': return Pauli::X;
        case 'Y': return Pauli::Y;
        case 'Z': return Pauli::Z;
        default:
            throw std::invalid_argument(std::string("invalid Pauli letter: ") + c);
    }
}

PauliSum::PauliSum(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("PauliSum n_qubits must be in [1, 16]");
    }
}

void PauliSum::add_term(double coeff, PauliString ops) {
    if (static_cast<int>(ops.size()) > n_qubits_) {
        throw std::invalid_argument("Pauli string longer than n_qubits");
    }
    if (!std::isfinite(coeff)) {
        throw std::invalid_argument("coefficient must be finite");
    }
    ops.resize(n_qubits_, Pauli::I);
    terms_.push_back(PauliTerm{coeff, std::move(ops)});
}

void PauliSum::add_term(double coeff, std::string_view letters) {
    PauliString ops;
    ops.reserve(letters.size());
    for (char c : letters) {
        ops.push_back(pauli_from_letter(c));
    }
    add_term(coeff, std::move(ops));
}

void PauliSum::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const PauliTerm& a, const PauliTerm& b) { return a.ops < b.ops; });
    std::vector<PauliTerm> merged;
    for (PauliTerm& term : terms_) {
        if (!merged.empty() && merged.back().ops == term.ops) {
            merged.back().coeff += term.coeff;
        } else {
            merged.push_back(std::move(term));
        }
    }
    terms_ = std::move(merged);
}

bool PauliSum::operator==(const PauliSum& other) const {
    if (n_qubits_ != other.n_qubits_ || terms_.size() != other.terms_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].ops != other.terms_[i].ops || terms_[i].coeff != other.terms_[i].coeff) {
            return false;
        }
    }
    return true;
}

double expectation(const PauliSum& m, const StateVector& s) {
    check_dimensions(m, s);
    Complex total{0.0, 0.0};
    for (const PauliTerm& term : m.terms()) {
        total += term.coeff * term_expectation(term.ops, s.amplitudes());
    }
    if (std::abs(total.imag()) > 1e-9) {
        throw std::logic_error("expectation has imaginary residue above tolerance");
    }
    return total.real();
}

double shot_expectation(const PauliSum& m, const StateVector& s, std::uint64_t shots,
                        std::uint64_t seed) {
    check_dimensions(m, s);
    if (shots == 0) {
        throw std::invalid_argument("shots must be >= 1");
    }
    // Rotations into the measured eigenbasis: H for X, then H S^dag for Y.
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const Unitary2 h{inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2};
    const Unitary2 h_sdag{inv_sqrt2, -kI * inv_sqrt2, inv_sqrt2, kI * inv_sqrt2};

    double total = 0.0;
    std::uint64_t term_index = 0;
    std::vector<double> cumulative;
    for (const PauliTerm& term : m.terms()) {
        const TermMasks masks = term_masks(term.ops);
        ++term_index;
        if (masks.support == 0) {
            total += term.coeff;
            continue;
        }
        StateVector rotated = s;
        for (int q = 0; q < s.n_qubits(); ++q) {
            if (term.ops[q] == Pauli::X) {
                rotated.apply_1q(q, h);
            } else if (term.ops[q] == Pauli::Y) {
                rotated.apply_1q(q, h_sdag);
            }
        }
        cumulative.resize(rotated.size());
        double run = 0.0;
        for (std::size_t k = 0; k < rotated.size(); ++k) {
            run += std::norm(rotated.amplitude(k));
            cumulative[k] = run;
        }
        const double norm = cumulative.back();

        Rng rng = Rng::stream(seed, term_index);
        std::int64_t parity_sum = 0;
        for (std::uint64_t shot = 0; shot < shots; ++shot) {
            const double u = rng.uniform() * norm;
            const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
            const std::size_t outcome =
                std::min<std::size_t>(it - cumulative.begin(), rotated.size() - 1);
            parity_sum += (std::popcount(outcome & masks.support) & 1) ? -1 : 1;
        }
        total += term.coeff * static_cast<double>(parity_sum) / static_cast<double>(shots);
    }
    return total;
}

GroundState ground_energy(const PauliSum& m) {
    if (m.n_qubits() > 10) {
        throw std::invalid_argument("ground_energy supports at most 10 qubits");
    }
    const Eigen::MatrixXcd dense = dense_matrix(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("dense eigensolve failed");
    }
    int best = 0;
    solver.eigenvalues().minCoeff(&best);
    const Eigen::VectorXcd column = solver.eigenvectors().col(best);
    std::vector<Complex> amplitudes(column.data(), column.data() + column.size());
    return GroundState{solver.eigenvalues()(best), StateVector(m.n_qubits(), std::move(amplitudes))};
}

void Graph::add_edge(int i, int j) {
    if (i == j) {
        throw std::invalid_argument("self-loop edges are not allowed");
    }
    if (i < 0 || j < 0 || i >= n_vertices || j >= n_vertices) {
        throw std::invalid_argument("edge endpoint out of range");
    }
    const auto edge = std::minmax(i, j);
    const std::pair<int, int> e{edge.first, edge.second};
    if (std::find(edges.begin(), edges.end(), e) != edges.end()) {
        throw std::invalid_argument("duplicate edge");
    }
    edges.push_back(e);
}

Graph Graph::petersen() {
    // Vertices 0-4: outer 5-cycle; 5-9: inner pentagram; spokes i -- i+5.
    Graph g;
    g.n_vertices = 10;
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

PauliSum heisenberg_1d(int n, double coupling, double field, bool periodic) {
    if (n < 2) {
        throw std::invalid_argument("heisenberg_1d requires n >= 2");
    }
    PauliSum sum(n);
    const int bonds = periodic ? (n == 2 ? 1 : n) : n - 1;
    for (int bond = 0; bond < bonds; ++bond) {
        const int i = bond;
        const int j = (bond + 1) % n;
        for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
            PauliString ops(n, Pauli::I);
            ops[i] = p;
            ops[j] = p;
            sum.add_term(coupling, std::move(ops));
        }
    }
    if (field != 0.0) {
        for (int i = 0; i < n; ++i) {
            PauliString ops(n, Pauli::I);
            ops[i] = Pauli::Z;
            sum.add_term(field, std::move(ops));
        }
    }
    sum.normalize();
    return sum;
}

PauliSum two_qubit_model() {
    return heisenberg_1d(2, 0.1, 0.01, false);
}

PauliSum maxcut_qubo(const Graph& g) {
    if (g.n_vertices < 1 || g.n_vertices > kMaxQubits) {
        throw std::invalid_argument("graph size out of simulable range");
    }
    PauliSum sum(g.n_vertices);
    sum.add_term(0.5 * static_cast<double>(g.edges.size()), PauliString{});
    for (const auto& [i, j] : g.edges) {
        PauliString ops(g.n_vertices, Pauli::I);
        ops[i] = Pauli::Z;
        ops[j] = Pauli::Z;
        sum.add_term(-0.5, std::move(ops));
    }
    sum.normalize();
    return sum;
}

PauliSum maxcut_relax(const Graph& g, const std::vector<VertexLabel>& labels) {
    if (static_cast<int>(labels.size()) != g.n_vertices) {
        throw std::invalid_argument("labeling must cover every vertex");
    }
    int n_qubits = 0;
    for (std::size_t v = 0; v < labels.size(); ++v) {
        const VertexLabel& label = labels[v];
        if (label.op == Pauli::I) {
            throw std::invalid_argument("vertex labels must be X, Y or Z");
        }
        if (label.qubit < 0) {
            throw std::invalid_argument("vertex label qubit out of range");
        }
        n_qubits = std::max(n_qubits, label.qubit + 1);
        for (std::size_t w = 0; w < v; ++w) {
            if (labels[w].qubit == label.qubit && labels[w].op == label.op) {
                throw std::invalid_argument("two vertices share the same (qubit, Pauli) label");
            }
        }
    }
    PauliSum sum(n_qubits);
    sum.add_term(0.5 * static_cast<double>(g.edges.size()), PauliString{});
    for (const auto& [i, j] : g.edges) {
        const VertexLabel& a = labels[i];
        const VertexLabel& b = labels[j];
        PauliString ops(n_qubits, Pauli::I);
        Complex weight{1.0, 0.0};
        if (a.qubit != b.qubit) {
            ops[a.qubit] = a.op;
            ops[b.qubit] = b.op;
        } else {
            Pauli product;
            pauli_product(a.op, b.op, product, weight);
            ops[a.qubit] = product;
        }
        const Complex coeff = -1.5 * weight;
        if (std::abs(coeff.imag()) > 1e-12) {
            throw std::invalid_argument("labeling produces an imaginary coupling weight");
        }
        sum.add_term(coeff.real(), std::move(ops));
    }
    sum.normalize();
    return sum;
}

std::vector<VertexLabel> petersen_relax_labels() {
    return {
        {0, Pauli::X}, {2, Pauli::Z}, {3, Pauli::Z}, {1, Pauli::X}, {2, Pauli::X},
        {2, Pauli::Y}, {0, Pauli::Y}, {0, Pauli::Z}, {3, Pauli::Y}, {3, Pauli::X},
    };
}

int cut_value(const Graph& g, const std::vector<int>& assignment) {
    if (static_cast<int>(assignment.size()) != g.n_vertices) {
        throw std::invalid_argument("assignment size does not match vertex count");
    }
    int cut = 0;
    for (const auto& [i, j] : g.edges) {
        if (assignment[i] != assignment[j]) {
            ++cut;
        }
    }
    return cut;
}

BruteForceCut max_cut_brute_force(const Graph& g) {
    if (g.n_vertices < 1 || g.n_vertices > 24) {
        throw std::invalid_argument("brute-force cut enumeration supports 1..24 vertices");
    }
    BruteForceCut best;
    best.assignment.assign(g.n_vertices, 1);
    // Vertex 0 fixed to +1: complements give the same cut.
    const std::uint64_t half_space = std::uint64_t{1} << (g.n_vertices - 1);
    for (std::uint64_t bits = 0; bits < half_space; ++bits) {
        int cut = 0;
        for (const auto& [i, j] : g.edges) {
            const int mi = (i > 0 && (bits >> (i - 1)) & 1) ? -1 : 1;
            const int mj = (j > 0 && (bits >> (j - 1)) & 1) ? -1 : 1;
            if (mi != mj) {
                ++cut;
            }
        }
        if (cut > best.best_cut) {
            best.best_cut = cut;
            for (int v = 0; v < g.n_vertices; ++v) {
                best.assignment[v] = (v > 0 && (bits >> (v - 1)) & 1) ? -1 : 1;
            }
        }
    }
    return best;
}

PauliSum parse_pauli_sum(std::string_view text) {
    std::istringstream stream{std::string(text)};
    std::string line;
    int line_number = 0;
    struct RawTerm {
        double coeff;
        std::string letters;
        int line;
    };
    std::vector<RawTerm> raw;
    std::size_t width = 0;
    while (std::getline(stream, line)) {
        ++line_number;
        if (is_blank_or_comment(line)) {
            continue;
        }
        std::istringstream fields(strip_comment(line));
        double coeff = 0.0;
        std::string letters;
        std::string extra;
        if (!(fields >> coeff >> letters)) {
            throw ParseError("expected '<coefficient> <letters>'", line_number);
        }
        if (fields >> extra) {
            throw ParseError("unexpected trailing field '" + extra + "'", line_number);
        }
        if (!std::isfinite(coeff)) {
            throw ParseError("coefficient must be finite", line_number);
        }
        for (char c : letters) {
            if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
                throw ParseError(std::string("invalid Pauli letter '") + c + "'", line_number);
            }
        }
        width = std::max(width, letters.size());
        raw.push_back(RawTerm{coeff, std::move(letters), line_number});
    }
    if (raw.empty()) {
        throw ParseError("no terms found", std::max(line_number, 1));
    }
    PauliSum sum(static_cast<int>(width));
    for (const RawTerm& term : raw) {
        if (term.letters.size() != width) {
            throw ParseError("Pauli string length differs from the rest of the file", term.line);
        }
        sum.add_term(term.coeff, term.letters);
    }
    sum.normalize();
    return sum;
}

std::string serialize_pauli_sum(const PauliSum& m) {
    std::ostringstream out;
    out.precision(17);
    for (const PauliTerm& term : m.terms()) {
        out << term.coeff << ' ';
        for (Pauli p : term.ops) {
            out << pauli_letter(p);
        }
        out << '\n';
    }
    return out.str();
}

PauliSum load_pauli_sum(const std::string& path) {
    return parse_pauli_sum(read_file(path));
}

void save_pauli_sum(const PauliSum& m, const std::string& path) {
    write_file(path, serialize_pauli_sum(m));
}

Graph parse_graph(std::string_view text) {
    std::istringstream stream{std::string(text)};
    std::string line;
    int line_number = 0;
    Graph g;
    bool have_header = false;
    while (std::getline(stream, line)) {
        ++line_number;
        if (is_blank_or_comment(line)) {
            continue;
        }
        std::istringstream fields(strip_comment(line));
        if (!have_header) {
            if (!(fields >> g.n_vertices) || g.n_vertices < 1) {
                throw ParseError("expected positive vertex count", line_number);
            }
            have_header = true;
            continue;
        }
        int i = 0, j = 0;
        if (!(fields >> i >> j)) {
            throw ParseError("expected edge 'i j'", line_number);
        }
        try {
            g.add_edge(i, j);
        } catch (const std::invalid_argument& err) {
            throw ParseError(err.what(), line_number);
        }
    }
    if (!have_header) {
        throw ParseError("empty graph file", std::max(line_number, 1));
    }
    return g;
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.n_vertices << '\n';
    for (const auto& [i, j] : g.edges) {
        out << i << ' ' << j << '\n';
    }
    return out.str();
}

Graph load_graph(const std::string& path) {
    return parse_graph(read_file(path));
}

std::vector<VertexLabel> parse_labels(std::string_view text, int n_vertices) {
    std::istringstream stream{std::string(text)};
    std::string line;
    int line_number = 0;
    std::vector<VertexLabel> labels(n_vertices);
    std::vector<bool> seen(n_vertices, false);
    while (std::getline(stream, line)) {
        ++line_number;
        if (is_blank_or_comment(line)) {
            continue;
        }
        std::istringstream fields(strip_comment(line));
        int vertex = 0, qubit = 0;
        std::string letter;
        if (!(fields >> vertex >> qubit >> letter) || letter.size() != 1) {
            throw ParseError("expected '<vertex> <qubit> <X|Y|Z>'", line_number);
        }
        if (vertex < 0 || vertex >= n_vertices) {
            throw ParseError("vertex out of range", line_number);
        }
        if (seen[vertex]) {
            throw ParseError("vertex labeled twice", line_number);
        }
        Pauli op;
        try {
            op = pauli_from_letter(letter[0]);
        } catch (const std::invalid_argument& err) {
            throw ParseError(err.what(), line_number);
        }
        if (op == Pauli::I) {
            throw ParseError("label must be X, Y or Z", line_number);
        }
        labels[vertex] = VertexLabel{qubit, op};
        seen[vertex] = true;
    }
    for (int v = 0; v < n_vertices; ++v) {
        if (!seen[v]) {
            throw ParseError("vertex " + std::to_string(v) + " has no label",
                             std::max(line_number, 1));
        }
    }
    return labels;
}

std::vector<VertexLabel> load_labels(const std::string& path, int n_vertices) {
    return parse_labels(read_file(path), n_vertices);
}

}  // namespace fraxis
