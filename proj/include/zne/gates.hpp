#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace zne {

using cplx = std::complex<double>;

enum class GateKind : std::uint8_t {
    H,
    X,
    Y,
    Z,
    S,
    Sdg,
    T,
    Tdg,
    RX,
    RY,
    RZ,
    CZ,
    CNOT,
    ISwap,
    ISwapDg,
};

// Square complex matrix of dimension 2 or 4, row-major. Local basis index of
// a k-qubit gate packs bit k from targets[k], so targets[0] is the least
// significant bit (matching the global little-endian qubit order).
struct SmallMat {
    int dim = 0;
    std::array<cplx, 16> a{};

    cplx& at(int r, int c) { return a[static_cast<std::size_t>(r * dim + c)]; }
    const cplx& at(int r, int c) const { return a[static_cast<std::size_t>(r * dim + c)]; }

    SmallMat dagger() const;
    SmallMat conj() const;
    // max |(M M^dag - I)_ij|
    double unitarity_error() const;
};

SmallMat matmul(const SmallMat& a, const SmallMat& b);

int gate_arity(GateKind kind);
bool gate_is_parametric(GateKind kind);  // true for RX, RY, RZ
std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_from_name(std::string_view name);

// Unitary of the gate; params must match gate_param_count (one angle in
// radians for rotations, none otherwise). Rotations follow
// R(theta) = exp(-i theta P / 2) with P the Pauli axis.
SmallMat gate_matrix(GateKind kind, const std::vector<double>& params);

// Kind of the inverse gate (self-inverse kinds map to themselves; rotations
// keep their kind, the angle is negated by the caller).
GateKind gate_adjoint_kind(GateKind kind);

// Pauli axis of a rotation gate (RX -> X etc.); only valid for parametric kinds.
GateKind rotation_axis(GateKind kind);

}  // namespace zne
