#include "zne/fold.hpp"

#include <cmath>

#include "zne/errors.hpp"
#include "zne/rng.hpp"

namespace zne {

namespace {

Layer layer_adjoint(const Layer& l) {
    Layer r;
    r.gates.reserve(l.gates.size());
    for (const Gate& g : l.gates) r.gates.push_back(g.adjoint());
    return r;
}

}  // namespace

FoldSpec resolve_fold(int depth, double lambda) {
    if (depth < 1) throw Error("resolve_fold: depth must be positive");
    if (!(lambda >= 1.0)) throw Error("resolve_fold: lambda must be >= 1");

    const double k_real = static_cast<double>(depth) * (lambda - 1.0) / 2.0;
    const long k = static_cast<long>(std::llround(k_real));  // rounds half away from zero

    FoldSpec spec;
    spec.k = k;
    spec.n = static_cast<int>(k / depth);
    spec.s = static_cast<int>(k % depth);
    spec.realized_lambda = 1.0 + 2.0 * static_cast<double>(k) / static_cast<double>(depth);
    return spec;
}

Circuit fold_global(const Circuit& c, double lambda) {
    if (c.depth() < 1) throw Error("fold_global: empty circuit");
    const FoldSpec spec = resolve_fold(c.depth(), lambda);
    const int d = c.depth();

    Circuit out;
    out.n_qubits = c.n_qubits;
    out.layers.reserve(static_cast<std::size_t>(spec.folded_depth(d)));

    // c (c^dag c)^n: run the circuit, then n echoes of the whole circuit
    out.layers = c.layers;
    for (int rep = 0; rep < spec.n; ++rep) {
        for (int j = d - 1; j >= 0; --j) out.layers.push_back(layer_adjoint(c.layers[static_cast<std::size_t>(j)]));
        for (int j = 0; j < d; ++j) out.layers.push_back(c.layers[static_cast<std::size_t>(j)]);
    }
    // partial fold over the final s layers: undo them in reverse, then redo
    for (int j = d - 1; j >= d - spec.s; --j)
        out.layers.push_back(layer_adjoint(c.layers[static_cast<std::size_t>(j)]));
    for (int j = d - spec.s; j < d; ++j) out.layers.push_back(c.layers[static_cast<std::size_t>(j)]);
    return out;
}

Circuit fold_gates(const Circuit& c, double lambda, FoldMethod method) {
    if (c.depth() < 1) throw Error("fold_gates: empty circuit");
    if (method.kind == FoldMethodKind::Global)
        throw Error("fold_gates: use fold_global for the Global method");
    const int d = c.depth();
    const FoldSpec spec = resolve_fold(d, lambda);

    // membership mask of the layer subset S, |S| = s
    std::vector<char> in_subset(static_cast<std::size_t>(d), 0);
    switch (method.kind) {
        case FoldMethodKind::FromLeft:
            for (int j = 0; j < spec.s; ++j) in_subset[static_cast<std::size_t>(j)] = 1;
            break;
        case FoldMethodKind::FromRight:
            for (int j = d - spec.s; j < d; ++j) in_subset[static_cast<std::size_t>(j)] = 1;
            break;
        case FoldMethodKind::AtRandom: {
            Rng rng(method.seed);
            for (int j : rng.sample_without_replacement(d, spec.s))
                in_subset[static_cast<std::size_t>(j)] = 1;
            break;
        }
        case FoldMethodKind::Global:
            break;  // unreachable
    }

    Circuit out;
    out.n_qubits = c.n_qubits;
    out.layers.reserve(static_cast<std::size_t>(spec.folded_depth(d)));
    for (int j = 0; j < d; ++j) {
        const Layer& l = c.layers[static_cast<std::size_t>(j)];
        const int folds = spec.n + (in_subset[static_cast<std::size_t>(j)] ? 1 : 0);
        out.layers.push_back(l);
        for (int rep = 0; rep < folds; ++rep) {
            out.layers.push_back(layer_adjoint(l));
            out.layers.push_back(l);
        }
    }
    return out;
}

}  // namespace zne
