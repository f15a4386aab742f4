#pragma once

#include <cstdint>

#include "zne/circuit.hpp"

namespace zne::bench {

// Uniformly random two-qubit Cliffords followed by the single inverting
// Clifford; the count is fixed by the sequence length. Noiseless survival of
// |00> is exactly 1.
Circuit generate_rb_sequence(int n_cliffords, std::uint64_t seed);

// Same, with the Clifford count chosen so the mean compiled depth over seeds
// is close to target_depth. Only n_qubits = 2 is supported.
Circuit generate_rb_circuit(int n_qubits, int target_depth, std::uint64_t seed);

// 6 qubits, 40 moments; single-qubit gates from {H, X, Y, Z, S, T},
// two-qubit gates from {iSWAP, CZ} with arbitrary connectivity.
Circuit generate_random6(std::uint64_t seed);
Circuit generate_random_moments(int n_qubits, int depth, std::uint64_t seed);

// Rotation-heavy random circuit (RX/RY/RZ plus occasional CZ/iSWAP) for the
// parameter-noise experiments.
Circuit generate_random_parametric(int n_qubits, int depth, std::uint64_t seed);

// depth/2 random Clifford layers followed by their adjoints: an n-qubit
// identity circuit of exactly `depth` layers with noiseless survival 1.
Circuit generate_mirror_circuit(int n_qubits, int depth, std::uint64_t seed);

}  // namespace zne::bench
