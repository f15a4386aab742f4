#pragma once

#include <string>
#include <vector>

#include "zne/gates.hpp"

namespace zne {

struct Gate {
    GateKind kind;
    std::vector<int> targets;
    std::vector<double> params;

    SmallMat matrix() const { return gate_matrix(kind, params); }
    Gate adjoint() const;

    bool operator==(const Gate&) const = default;
};

// Gates acting in parallel on disjoint qubit sets.
struct Layer {
    std::vector<Gate> gates;

    bool operator==(const Layer&) const = default;
};

// Immutable after construction by convention: transforms return new values.
// Layer 0 is applied first; the circuit unitary is L_{d-1} ... L_1 L_0.
struct Circuit {
    int n_qubits = 0;
    std::vector<Layer> layers;

    int depth() const { return static_cast<int>(layers.size()); }
    int gate_count() const;

    // throws Error on out-of-range targets, arity mismatch, or a qubit
    // appearing twice within one layer
    void validate() const;

    bool operator==(const Circuit&) const = default;
};

// Text format: first line "qubits <n>"; each following non-empty line is one
// layer; gates separated by ';'; gate syntax "<NAME> <q...> [<angle>]";
// '#' starts a comment. Angles are decimal radians.
Circuit parse_circuit(const std::string& text);
std::string serialize_circuit(const Circuit& c);

// Layers reversed, every gate inverted. unitary_of(adjoint(c)) == unitary_of(c)^dag.
Circuit adjoint(const Circuit& c);

// Layers of a followed by layers of b; qubit counts must match.
Circuit concat(const Circuit& a, const Circuit& b);

// Every gate split into its own single-gate layer, preserving order.
Circuit as_gate_layers(const Circuit& c);

// Full 2^n x 2^n unitary, row-major. Guarded by a qubit cap since the result
// is dense.
std::vector<cplx> unitary_of(const Circuit& c, int max_qubits = 10);

}  // namespace zne
