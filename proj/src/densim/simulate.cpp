#include "zne/simulate.hpp"

#include <cmath>

#include "zne/errors.hpp"
#include "zne/rng.hpp"

namespace zne {

Observable Observable::projector(std::uint64_t bits) {
    Observable o;
    o.bits_ = bits;
    return o;
}

Observable Observable::dense(std::vector<cplx> matrix, int n_qubits) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (matrix.size() != dim * dim) throw Error("Observable::dense: size mismatch");
    double herm_err = 0.0;
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = r; c < dim; ++c)
            herm_err = std::max(herm_err, std::abs(matrix[r * dim + c] - std::conj(matrix[c * dim + r])));
    if (herm_err > 1e-12) throw Error("Observable::dense: matrix is not Hermitian");
    Observable o;
    o.dense_ = std::move(matrix);
    o.dense_dim_ = dim;
    return o;
}

double Observable::expectation(const DensityMatrix& rho) const {
    if (is_projector()) {
        if (bits_ >= rho.dim()) throw Error("Observable: projector bits out of range");
        return rho.at(bits_, bits_).real();
    }
    if (dense_dim_ != rho.dim()) throw Error("Observable: dimension mismatch");
    // Tr(O rho) = sum_ij O[i][j] rho[j][i]
    cplx t = 0.0;
    for (std::size_t i = 0; i < dense_dim_; ++i)
        for (std::size_t j = 0; j < dense_dim_; ++j) t += dense_[i * dense_dim_ + j] * rho.at(j, i);
    return t.real();
}

DensityMatrix simulate_state(const Circuit& c, const NoiseModel& nm, const DensityMatrix* initial) {
    DensityMatrix rho = initial ? *initial : DensityMatrix::basis_state(c.n_qubits, 0);
    if (rho.n_qubits() != c.n_qubits) throw Error("simulate_state: qubit count mismatch");

    for (const Layer& layer : c.layers) {
        for (const Gate& g : layer.gates) {
            apply_gate(rho, g);
            if (nm.angle_sigma2 > 0.0 && gate_is_parametric(g.kind)) {
                const SmallMat axis = gate_matrix(rotation_axis(g.kind), {});
                apply_angle_noise_channel(rho, axis, nm.angle_sigma2, g.targets);
            }
            if (nm.dep_mode == DepolarizingMode::GlobalPerGate) apply_depolarizing(rho, nm.dep_keep);
        }
        if (nm.dep_mode == DepolarizingMode::GlobalPerLayer) apply_depolarizing(rho, nm.dep_keep);
        if (nm.dep_mode == DepolarizingMode::LocalPerQubitPerLayer && nm.dep_local_p > 0.0)
            for (int q = 0; q < c.n_qubits; ++q) apply_local_depolarizing(rho, nm.dep_local_p, q);
        if (nm.amp_damping_gamma > 0.0)
            for (int q = 0; q < c.n_qubits; ++q) apply_amplitude_damping(rho, nm.amp_damping_gamma, q);
    }
    return rho;
}

double simulate_expectation(const Circuit& c, const NoiseModel& nm, const Observable& obs,
                            const DensityMatrix* initial) {
    return obs.expectation(simulate_state(c, nm, initial));
}

std::vector<double> simulate_probabilities(const Circuit& c, const NoiseModel& nm,
                                           const DensityMatrix* initial) {
    return simulate_state(c, nm, initial).probabilities();
}

double sample_expectation(const Circuit& c, const NoiseModel& nm, const Observable& obs, long shots,
                          std::uint64_t seed, const DensityMatrix* initial) {
    if (shots < 1) throw Error("sample_expectation: shots must be >= 1");
    if (!obs.is_projector())
        throw Error("sample_expectation: only projector observables have shot sampling; "
                    "use gaussian_noise_executor");
    double p = simulate_expectation(c, nm, obs, initial);
    p = std::min(1.0, std::max(0.0, p));  // clip fp rounding outside [0, 1]
    Rng rng(seed);
    long hits = 0;
    for (long i = 0; i < shots; ++i)
        if (rng.uniform() < p) ++hits;
    return static_cast<double>(hits) / static_cast<double>(shots);
}

double gaussian_noise_executor(const Circuit& c, const NoiseModel& nm, const Observable& obs,
                               double sigma0, long shots, std::uint64_t seed,
                               const DensityMatrix* initial) {
    if (shots < 1) throw Error("gaussian_noise_executor: shots must be >= 1");
    if (sigma0 < 0.0) throw Error("gaussian_noise_executor: sigma0 must be >= 0");
    const double exact = simulate_expectation(c, nm, obs, initial);
    if (sigma0 == 0.0) return exact;
    Rng rng(seed);
    return rng.gaussian(exact, sigma0 / std::sqrt(static_cast<double>(shots)));
}

}  // namespace zne
