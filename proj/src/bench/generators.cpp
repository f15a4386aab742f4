#include "zne/bench/generators.hpp"

#include <cmath>

#include "zne/bench/clifford2q.hpp"
#include "zne/errors.hpp"
#include "zne/rng.hpp"

namespace zne::bench {

Circuit generate_rb_sequence(int n_cliffords, std::uint64_t seed) {
    if (n_cliffords < 1) throw ConfigError("generate_rb_sequence: need at least one Clifford");
    const Clifford2QTable& table = Clifford2QTable::instance();
    Rng rng(seed);

    Circuit c;
    c.n_qubits = 2;
    Mat4 product{};
    for (int i = 0; i < 4; ++i) product[static_cast<std::size_t>(5 * i)] = 1.0;

    for (int i = 0; i < n_cliffords; ++i) {
        const int idx = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(table.size())));
        for (Layer& l : table.word(idx)) c.layers.push_back(std::move(l));
        product = matmul4(table.unitary(idx), product);
    }
    const int inv = table.index_of(dagger4(product));
    if (inv < 0) throw Error("generate_rb_sequence: inverse lookup failed");
    for (Layer& l : table.word(inv)) c.layers.push_back(std::move(l));
    return c;
}

Circuit generate_rb_circuit(int n_qubits, int target_depth, std::uint64_t seed) {
    if (n_qubits != 2) throw ConfigError("generate_rb_circuit: only two-qubit RB is supported");
    if (target_depth < 1) throw ConfigError("generate_rb_circuit: bad target depth");
    const double mu = Clifford2QTable::instance().mean_word_length();
    const int total = std::max(2, static_cast<int>(std::lround(static_cast<double>(target_depth) / mu)));
    return generate_rb_sequence(total - 1, seed);  // the inverse contributes one more word
}

namespace {

// dense moment over n qubits: n2 two-qubit gates on shuffled pairs, 1q gates
// elsewhere
Layer random_moment(Rng& rng, int n_qubits, int max_two_qubit, const std::vector<GateKind>& oneq,
                    const std::vector<GateKind>& twoq, bool parametric) {
    std::vector<int> order(static_cast<std::size_t>(n_qubits));
    for (int i = 0; i < n_qubits; ++i) order[static_cast<std::size_t>(i)] = i;
    rng.shuffle(order);
    const int n2 = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(max_two_qubit + 1)));

    Layer layer;
    int used = 0;
    for (int k = 0; k < n2; ++k) {
        Gate g;
        g.kind = twoq[rng.uniform_int(twoq.size())];
        g.targets = {order[static_cast<std::size_t>(used)], order[static_cast<std::size_t>(used + 1)]};
        layer.gates.push_back(std::move(g));
        used += 2;
    }
    for (; used < n_qubits; ++used) {
        Gate g;
        g.kind = oneq[rng.uniform_int(oneq.size())];
        g.targets = {order[static_cast<std::size_t>(used)]};
        if (parametric) g.params.push_back(rng.uniform() * 2.0 * M_PI);
        layer.gates.push_back(std::move(g));
    }
    return layer;
}

}  // namespace

Circuit generate_random_moments(int n_qubits, int depth, std::uint64_t seed) {
    static const std::vector<GateKind> oneq = {GateKind::H, GateKind::X, GateKind::Y,
                                               GateKind::Z, GateKind::S, GateKind::T};
    static const std::vector<GateKind> twoq = {GateKind::ISwap, GateKind::CZ};
    Rng rng(seed);
    Circuit c;
    c.n_qubits = n_qubits;
    for (int d = 0; d < depth; ++d)
        c.layers.push_back(random_moment(rng, n_qubits, n_qubits / 2, oneq, twoq, false));
    return c;
}

Circuit generate_random6(std::uint64_t seed) { return generate_random_moments(6, 40, seed); }

Circuit generate_random_parametric(int n_qubits, int depth, std::uint64_t seed) {
    static const std::vector<GateKind> oneq = {GateKind::RX, GateKind::RY, GateKind::RZ};
    static const std::vector<GateKind> twoq = {GateKind::CZ, GateKind::ISwap};
    Rng rng(seed);
    Circuit c;
    c.n_qubits = n_qubits;
    for (int d = 0; d < depth; ++d)
        c.layers.push_back(random_moment(rng, n_qubits, 1, oneq, twoq, true));
    return c;
}

Circuit generate_mirror_circuit(int n_qubits, int depth, std::uint64_t seed) {
    if (depth % 2 != 0 || depth < 2) throw ConfigError("generate_mirror_circuit: depth must be even");
    static const std::vector<GateKind> oneq = {GateKind::H, GateKind::X, GateKind::Y,
                                               GateKind::Z, GateKind::S, GateKind::Sdg};
    static const std::vector<GateKind> twoq = {GateKind::CZ, GateKind::CNOT, GateKind::ISwap};
    Rng rng(seed);
    Circuit half;
    half.n_qubits = n_qubits;
    for (int d = 0; d < depth / 2; ++d)
        half.layers.push_back(random_moment(rng, n_qubits, n_qubits / 2, oneq, twoq, false));
    return concat(half, adjoint(half));
}

}  // namespace zne::bench
