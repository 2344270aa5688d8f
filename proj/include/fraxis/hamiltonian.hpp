#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fraxis/statevector.hpp"

namespace fraxis {

/// Raised by the text-format readers; `line` is 1-based.
struct ParseError : std::runtime_error {
    ParseError(const std::string& message, int line_number)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
          line(line_number) {}
    int line;
};

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_letter(Pauli p);
Pauli pauli_from_letter(char c);

/// One letter per qubit; leftmost letter is qubit 0 in the text format.
using PauliString = std::vector<Pauli>;

struct PauliTerm {
    double coeff = 0.0;
    PauliString ops;
};

/// Real-weighted sum of Pauli strings; the Hermitian observable being minimized.
class PauliSum {
  public:
    explicit PauliSum(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    const std::vector<PauliTerm>& terms() const { return terms_; }

    void add_term(double coeff, PauliString ops);
    /// Letters over {I,X,Y,Z}; shorter strings are padded with I on the right.
    void add_term(double coeff, std::string_view letters);

    /// Sorts terms lexicographically and merges duplicate strings.
    void normalize();

    bool operator==(const PauliSum& other) const;

  private:
    int n_qubits_;
    std::vector<PauliTerm> terms_;
};

/// Exact <s|M|s>. The accumulated imaginary residue must stay below 1e-9.
double expectation(const PauliSum& m, const StateVector& s);

/// Per-term estimate from `shots` simulated eigenbasis measurements.
/// Unbiased; deterministic for a fixed (state, shots, seed).
double shot_expectation(const PauliSum& m, const StateVector& s, std::uint64_t shots,
                        std::uint64_t seed);

struct GroundState {
    double energy;
    StateVector state;
};

/// Brute-force minimum eigenpair of the dense 2^n matrix; n_qubits <= 10.
GroundState ground_energy(const PauliSum& m);

/// Undirected simple graph; edges are stored with i < j.
struct Graph {
    int n_vertices = 0;
    std::vector<std::pair<int, int>> edges;

    void add_edge(int i, int j);
    static Graph petersen();
};

/// J sum_(i,j) (XX + YY + ZZ) + h sum_i Z; ring when periodic, path otherwise.
PauliSum heisenberg_1d(int n, double coupling, double field, bool periodic);

/// The 2-qubit benchmark model 0.1 (XX + YY + ZZ) + 0.01 (IZ + ZI).
PauliSum two_qubit_model();

/// sum_(i,j) 1/2 (1 - Z_i Z_j) on |V| qubits. Evaluates to the cut size on
/// computational basis states; callers maximizing it negate for a minimizer.
PauliSum maxcut_qubo(const Graph& g);

/// Single-qubit Pauli assigned to a vertex in the compressed encoding.
struct VertexLabel {
    int qubit = 0;
    Pauli op = Pauli::Z;  // X, Y or Z
};

/// sum_(i,j) 1/2 (1 - 3 W_i W_j) with W_v the labeled single-qubit Pauli.
/// Same-qubit label products are resolved by Pauli multiplication; a product
/// with an imaginary weight is an invalid labeling.
PauliSum maxcut_relax(const Graph& g, const std::vector<VertexLabel>& labels);

/// The 4-qubit labeling used for the built-in Petersen relaxation.
std::vector<VertexLabel> petersen_relax_labels();

/// sum_(i,j) 1/2 (1 - m_i m_j) for a +/-1 assignment.
int cut_value(const Graph& g, const std::vector<int>& assignment);

struct BruteForceCut {
    int best_cut = 0;
    std::vector<int> assignment;
};

/// Exhaustive 2^(n-1) enumeration; n_vertices <= 24.
BruteForceCut max_cut_brute_force(const Graph& g);

// Text formats. Pauli-sum files: one "<coeff> <letters>" term per line,
// '#' starts a comment. Graph files: "<n_vertices>" then "i j" per line.
// Label files: "<vertex> <qubit> <X|Y|Z>" per line.
PauliSum parse_pauli_sum(std::string_view text);
std::string serialize_pauli_sum(const PauliSum& m);
PauliSum load_pauli_sum(const std::string& path);
void save_pauli_sum(const PauliSum& m, const std::string& path);

Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);
Graph load_graph(const std::string& path);

std::vector<VertexLabel> parse_labels(std::string_view text, int n_vertices);
std::vector<VertexLabel> load_labels(const std::string& path, int n_vertices);

}  // namespace fraxis
