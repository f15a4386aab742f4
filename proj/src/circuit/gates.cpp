#include "zne/gates.hpp"

#include <cmath>

#include "zne/errors.hpp"

namespace zne {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
const cplx kI{0.0, 1.0};

SmallMat mat2(cplx a, cplx b, cplx c, cplx d) {
    SmallMat m;
    m.dim = 2;
    m.a[0] = a;
    m.a[1] = b;
    m.a[2] = c;
    m.a[3] = d;
    return m;
}
}  // namespace

SmallMat SmallMat::dagger() const {
    SmallMat r;
    r.dim = dim;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) r.at(i, j) = std::conj(at(j, i));
    return r;
}

SmallMat SmallMat::conj() const {
    SmallMat r;
    r.dim = dim;
    for (int i = 0; i < dim * dim; ++i) r.a[static_cast<std::size_t>(i)] = std::conj(a[static_cast<std::size_t>(i)]);
    return r;
}

double SmallMat::unitarity_error() const {
    SmallMat p = matmul(*this, dagger());
    double err = 0.0;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            cplx expect = (i == j) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
            err = std::max(err, std::abs(p.at(i, j) - expect));
        }
    return err;
}

SmallMat matmul(const SmallMat& a, const SmallMat& b) {
    SmallMat r;
    r.dim = a.dim;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < a.dim; ++k) s += a.at(i, k) * b.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

int gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::CZ:
        case GateKind::CNOT:
        case GateKind::ISwap:
        case GateKind::ISwapDg:
            return 2;
        default:
            return 1;
    }
}

bool gate_is_parametric(GateKind kind) {
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
}

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::S: return "S";
        case GateKind::Sdg: return "SDG";
        case GateKind::T: return "T";
        case GateKind::Tdg: return "TDG";
        case GateKind::RX: return "RX";
        case GateKind::RY: return "RY";
        case GateKind::RZ: return "RZ";
        case GateKind::CZ: return "CZ";
        case GateKind::CNOT: return "CNOT";
        case GateKind::ISwap: return "ISWAP";
        case GateKind::ISwapDg: return "ISWAPDG";
    }
    return "?";
}

std::optional<GateKind> gate_from_name(std::string_view name) {
    static const std::pair<std::string_view, GateKind> table[] = {
        {"H", GateKind::H},         {"X", GateKind::X},       {"Y", GateKind::Y},
        {"Z", GateKind::Z},         {"S", GateKind::S},       {"SDG", GateKind::Sdg},
        {"T", GateKind::T},         {"TDG", GateKind::Tdg},   {"RX", GateKind::RX},
        {"RY", GateKind::RY},       {"RZ", GateKind::RZ},     {"CZ", GateKind::CZ},
        {"CNOT", GateKind::CNOT},   {"ISWAP", GateKind::ISwap}, {"ISWAPDG", GateKind::ISwapDg},
    };
    for (const auto& [n, k] : table)
        if (n == name) return k;
    return std::nullopt;
}

SmallMat gate_matrix(GateKind kind, const std::vector<double>& params) {
    const bool wants_param = gate_is_parametric(kind);
    if ((wants_param && params.size() != 1) || (!wants_param && !params.empty()))
        throw Error("parameter count mismatch for gate " + std::string(gate_name(kind)));

    switch (kind) {
        case GateKind::H:
            return mat2(kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2);
        case GateKind::X:
            return mat2(0, 1, 1, 0);
        case GateKind::Y:
            return mat2(0, -kI, kI, 0);
        case GateKind::Z:
            return mat2(1, 0, 0, -1);
        case GateKind::S:
            return mat2(1, 0, 0, kI);
        case GateKind::Sdg:
            return mat2(1, 0, 0, -kI);
        case GateKind::T:
            return mat2(1, 0, 0, std::polar(1.0, M_PI / 4));
        case GateKind::Tdg:
            return mat2(1, 0, 0, std::polar(1.0, -M_PI / 4));
        case GateKind::RX: {
            double c = std::cos(params[0] / 2), s = std::sin(params[0] / 2);
            return mat2(c, -kI * s, -kI * s, c);
        }
        case GateKind::RY: {
            double c = std::cos(params[0] / 2), s = std::sin(params[0] / 2);
            return mat2(c, -s, s, c);
        }
        case GateKind::RZ: {
            return mat2(std::polar(1.0, -params[0] / 2), 0, 0, std::polar(1.0, params[0] / 2));
        }
        case GateKind::CZ: {
            SmallMat m;
            m.dim = 4;
            m.at(0, 0) = m.at(1, 1) = m.at(2, 2) = 1;
            m.at(3, 3) = -1;
            return m;
        }
        case GateKind::CNOT: {
            // control = targets[0] (local bit 0), target = targets[1]
            SmallMat m;
            m.dim = 4;
            m.at(0, 0) = m.at(2, 2) = 1;
            m.at(3, 1) = m.at(1, 3) = 1;
            return m;
        }
        case GateKind::ISwap: {
            SmallMat m;
            m.dim = 4;
            m.at(0, 0) = m.at(3, 3) = 1;
            m.at(2, 1) = m.at(1, 2) = kI;
            return m;
        }
        case GateKind::ISwapDg: {
            SmallMat m;
            m.dim = 4;
            m.at(0, 0) = m.at(3, 3) = 1;
            m.at(2, 1) = m.at(1, 2) = -kI;
            return m;
        }
    }
    throw Error("unknown gate kind");
}

GateKind gate_adjoint_kind(GateKind kind) {
    switch (kind) {
        case GateKind::S: return GateKind::Sdg;
        case GateKind::Sdg: return GateKind::S;
        case GateKind::T: return GateKind::Tdg;
        case GateKind::Tdg: return GateKind::T;
        case GateKind::ISwap: return GateKind::ISwapDg;
        case GateKind::ISwapDg: return GateKind::ISwap;
        default: return kind;  // H, X, Y, Z, CZ, CNOT self-inverse; rotations negate angle
    }
}

GateKind rotation_axis(GateKind kind) {
    switch (kind) {
        case GateKind::RX: return GateKind::X;
        case GateKind::RY: return GateKind::Y;
        case GateKind::RZ: return GateKind::Z;
        default: throw Error("rotation_axis: gate is not parametric");
    }
}

}  // namespace zne
