#include "zne/circuit.hpp"

#include <algorithm>

#include "zne/apply.hpp"
#include "zne/errors.hpp"

namespace zne {

Gate Gate::adjoint() const {
    Gate g;
    g.kind = gate_adjoint_kind(kind);
    g.targets = targets;
    g.params = params;
    for (double& p : g.params) p = -p;
    return g;
}

int Circuit::gate_count() const {
    int n = 0;
    for (const Layer& l : layers) n += static_cast<int>(l.gates.size());
    return n;
}

void Circuit::validate() const {
    if (n_qubits <= 0) throw Error("circuit must have at least one qubit");
    for (const Layer& layer : layers) {
        if (layer.gates.empty()) throw Error("empty layer");
        std::vector<int> used;
        for (const Gate& g : layer.gates) {
            if (static_cast<int>(g.targets.size()) != gate_arity(g.kind))
                throw Error("target count mismatch for gate " + std::string(gate_name(g.kind)));
            const std::size_t want_params = gate_is_parametric(g.kind) ? 1 : 0;
            if (g.params.size() != want_params)
                throw Error("parameter count mismatch for gate " + std::string(gate_name(g.kind)));
            for (int t : g.targets) {
                if (t < 0 || t >= n_qubits) throw Error("qubit index out of range");
                if (std::find(used.begin(), used.end(), t) != used.end())
                    throw Error("qubit used twice in one layer");
                used.push_back(t);
            }
            if (g.targets.size() == 2 && g.targets[0] == g.targets[1])
                throw Error("two-qubit gate with identical targets");
        }
    }
}

Circuit adjoint(const Circuit& c) {
    Circuit r;
    r.n_qubits = c.n_qubits;
    r.layers.reserve(c.layers.size());
    for (auto it = c.layers.rbegin(); it != c.layers.rend(); ++it) {
        Layer l;
        l.gates.reserve(it->gates.size());
        for (const Gate& g : it->gates) l.gates.push_back(g.adjoint());
        r.layers.push_back(std::move(l));
    }
    return r;
}

Circuit concat(const Circuit& a, const Circuit& b) {
    if (a.n_qubits != b.n_qubits) throw Error("concat: qubit count mismatch");
    Circuit r = a;
    r.layers.insert(r.layers.end(), b.layers.begin(), b.layers.end());
    return r;
}

Circuit as_gate_layers(const Circuit& c) {
    Circuit r;
    r.n_qubits = c.n_qubits;
    for (const Layer& layer : c.layers)
        for (const Gate& g : layer.gates) r.layers.push_back(Layer{{g}});
    return r;
}

std::vector<cplx> unitary_of(const Circuit& c, int max_qubits) {
    if (c.n_qubits > max_qubits)
        throw Error("unitary_of: qubit count exceeds cap of " + std::to_string(max_qubits));
    const std::size_t dim = std::size_t{1} << c.n_qubits;
    std::vector<cplx> u(dim * dim, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < dim; ++i) u[i * dim + i] = 1.0;
    for (const Layer& layer : c.layers)
        for (const Gate& g : layer.gates) apply_matrix_left(u.data(), c.n_qubits, g.matrix(), g.targets);
    return u;
}

}  // namespace zne
