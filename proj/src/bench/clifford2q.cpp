#include "zne/bench/clifford2q.hpp"

#include <cmath>

#include "zne/apply.hpp"
#include "zne/errors.hpp"

namespace zne::bench {

Mat4 matmul4(const Mat4& a, const Mat4& b) {
    Mat4 r{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const cplx aik = a[static_cast<std::size_t>(4 * i + k)];
            if (aik == cplx{0.0, 0.0}) continue;
            for (int j = 0; j < 4; ++j)
                r[static_cast<std::size_t>(4 * i + j)] += aik * b[static_cast<std::size_t>(4 * k + j)];
        }
    return r;
}

Mat4 dagger4(const Mat4& m) {
    Mat4 r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r[static_cast<std::size_t>(4 * i + j)] = std::conj(m[static_cast<std::size_t>(4 * j + i)]);
    return r;
}

namespace {

Mat4 layer_unitary(const Layer& layer) {
    std::vector<cplx> u(16, cplx{0.0, 0.0});
    for (int i = 0; i < 4; ++i) u[static_cast<std::size_t>(4 * i + i)] = 1.0;
    for (const Gate& g : layer.gates) apply_matrix_left(u.data(), 2, g.matrix(), g.targets);
    Mat4 m;
    for (int i = 0; i < 16; ++i) m[static_cast<std::size_t>(i)] = u[static_cast<std::size_t>(i)];
    return m;
}

}  // namespace

Clifford2QTable::Key Clifford2QTable::canonical_key(const Mat4& u) {
    // fix the global phase by the first entry of meaningful magnitude
    // (nonzero Clifford entries are at least 1/(2 sqrt(2)) in modulus)
    cplx phase{1.0, 0.0};
    for (const cplx& v : u)
        if (std::abs(v) > 0.2) {
            phase = v / std::abs(v);
            break;
        }
    Key k{};
    for (int i = 0; i < 16; ++i) {
        const cplx v = u[static_cast<std::size_t>(i)] * std::conj(phase);
        k[static_cast<std::size_t>(2 * i)] = static_cast<std::int16_t>(std::lround(v.real() * 512.0));
        k[static_cast<std::size_t>(2 * i + 1)] = static_cast<std::int16_t>(std::lround(v.imag() * 512.0));
    }
    return k;
}

const Clifford2QTable& Clifford2QTable::instance() {
    static const Clifford2QTable table;
    return table;
}

Clifford2QTable::Clifford2QTable() {
    // single-qubit layer generators: every non-identity combination of
    // {1, H, X, Y, Z, S, SDG} on the two qubits
    const GateKind oneq[] = {GateKind::H, GateKind::X, GateKind::Y,
                             GateKind::Z, GateKind::S, GateKind::Sdg};
    for (int g0 = -1; g0 < 6; ++g0)
        for (int g1 = -1; g1 < 6; ++g1) {
            if (g0 < 0 && g1 < 0) continue;
            Layer l;
            if (g0 >= 0) l.gates.push_back({oneq[g0], {0}, {}});
            if (g1 >= 0) l.gates.push_back({oneq[g1], {1}, {}});
            generators_.push_back(l);
        }
    generators_.push_back(Layer{{Gate{GateKind::CZ, {0, 1}, {}}}});
    generators_.push_back(Layer{{Gate{GateKind::CNOT, {0, 1}, {}}}});
    generators_.push_back(Layer{{Gate{GateKind::CNOT, {1, 0}, {}}}});
    generators_.push_back(Layer{{Gate{GateKind::ISwap, {0, 1}, {}}}});

    std::vector<Mat4> gen_u;
    gen_u.reserve(generators_.size());
    for (const Layer& l : generators_) gen_u.push_back(layer_unitary(l));

    Mat4 identity{};
    for (int i = 0; i < 4; ++i) identity[static_cast<std::size_t>(5 * i)] = 1.0;
    elems_.push_back({identity, -1, -1, 0});
    index_.emplace(canonical_key(identity), 0);

    for (std::size_t head = 0; head < elems_.size(); ++head) {
        const Mat4 base = elems_[head].u;
        const int base_depth = elems_[head].depth;
        for (std::size_t g = 0; g < gen_u.size(); ++g) {
            Mat4 next = matmul4(gen_u[g], base);  // generator applied after the word so far
            Key key = canonical_key(next);
            if (index_.emplace(key, static_cast<int>(elems_.size())).second)
                elems_.push_back({next, static_cast<int>(head), static_cast<int>(g), base_depth + 1});
        }
    }
    if (elems_.size() != 11520) throw Error("Clifford2QTable: enumeration produced wrong group order");

    inverse_.resize(elems_.size());
    long depth_sum = 0;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        const int inv = index_of(dagger4(elems_[i].u));
        if (inv < 0) throw Error("Clifford2QTable: missing inverse");
        inverse_[i] = inv;
        depth_sum += elems_[i].depth;
    }
    mean_word_length_ = static_cast<double>(depth_sum) / static_cast<double>(elems_.size());
}

std::vector<Layer> Clifford2QTable::word(int idx) const {
    std::vector<int> gens;
    for (int cur = idx; cur > 0; cur = elems_[static_cast<std::size_t>(cur)].parent)
        gens.push_back(elems_[static_cast<std::size_t>(cur)].gen);
    std::vector<Layer> layers;
    layers.reserve(gens.size());
    for (auto it = gens.rbegin(); it != gens.rend(); ++it)
        layers.push_back(generators_[static_cast<std::size_t>(*it)]);
    return layers;
}

int Clifford2QTable::index_of(const Mat4& u) const {
    auto it = index_.find(canonical_key(u));
    return it == index_.end() ? -1 : it->second;
}

}  // namespace zne::bench
