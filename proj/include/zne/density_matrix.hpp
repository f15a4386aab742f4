#pragma once

#include <cstdint>
#include <vector>

#include "zne/circuit.hpp"

namespace zne {

// Dense 2^n x 2^n density matrix, row-major. Channel application mutates in
// place; simulations of different circuits never share a DensityMatrix.
class DensityMatrix {
  public:
    static constexpr int kMaxQubits = 12;

    explicit DensityMatrix(int n_qubits);

    // |bits><bits| with bit q of `bits` the state of qubit q
    static DensityMatrix basis_state(int n_qubits, std::uint64_t bits);

    int n_qubits() const { return n_; }
    std::size_t dim() const { return std::size_t{1} << n_; }

    cplx* data() { return a_.data(); }
    const cplx* data() const { return a_.data(); }
    cplx& at(std::size_t r, std::size_t c) { return a_[r * dim() + c]; }
    const cplx& at(std::size_t r, std::size_t c) const { return a_[r * dim() + c]; }

    double trace_real() const;
    // max |rho - rho^dag| entry
    double hermiticity_error() const;
    // real parts of the diagonal (measurement distribution in the
    // computational basis)
    std::vector<double> probabilities() const;

  private:
    int n_;
    std::vector<cplx> a_;
};

// rho -> G rho G^dag
void apply_gate(DensityMatrix& rho, const Gate& g);

// global depolarizing in the keep-probability parametrization:
// rho -> p rho + (1-p) I/D
void apply_depolarizing(DensityMatrix& rho, double p);

// standard single-qubit depolarizing on one qubit:
// rho -> (1-p) rho + p/3 (X rho X + Y rho Y + Z rho Z)
void apply_local_depolarizing(DensityMatrix& rho, double p, int qubit);

// standard two-Kraus amplitude damping on one qubit
void apply_amplitude_damping(DensityMatrix& rho, double gamma, int qubit);

// mixture of identity and conjugation by a Hermitian involution h acting on
// `targets`: rho -> (1-Q) rho + Q H rho H, Q = (1 - exp(-2 sigma2)) / 2
void apply_angle_noise_channel(DensityMatrix& rho, const SmallMat& h, double sigma2,
                               const std::vector<int>& targets);

double angle_noise_q(double sigma2);

}  // namespace zne
