#pragma once

#include <vector>

#include "zne/gates.hpp"

namespace zne {

// Low-level embedding of small unitaries into 2^n-dimensional operators
// stored row-major as dense complex buffers. Shared by unitary_of and the
// density-matrix simulator.
//
// a <- (U embedded on targets) * a
void apply_matrix_left(cplx* a, int n_qubits, const SmallMat& u, const std::vector<int>& targets);

// a <- a * (U embedded on targets)^dag
void apply_matrix_right_dag(cplx* a, int n_qubits, const SmallMat& u, const std::vector<int>& targets);

}  // namespace zne
