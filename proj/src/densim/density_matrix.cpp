#include "zne/density_matrix.hpp"

#include <cmath>

#include "zne/apply.hpp"
#include "zne/errors.hpp"
#include "zne/kernels.hpp"

namespace zne {

using kernels::active_ops;

DensityMatrix::DensityMatrix(int n_qubits) : n_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw Error("DensityMatrix: qubit count out of range [1, " + std::to_string(kMaxQubits) + "]");
    a_.assign(dim() * dim(), cplx{0.0, 0.0});
}

DensityMatrix DensityMatrix::basis_state(int n_qubits, std::uint64_t bits) {
    DensityMatrix rho(n_qubits);
    if (bits >= rho.dim()) throw Error("basis_state: bitstring out of range");
    rho.at(bits, bits) = 1.0;
    return rho;
}

double DensityMatrix::trace_real() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) t += at(i, i).real();
    return t;
}

double DensityMatrix::hermiticity_error() const {
    double err = 0.0;
    for (std::size_t r = 0; r < dim(); ++r)
        for (std::size_t c = r; c < dim(); ++c)
            err = std::max(err, std::abs(at(r, c) - std::conj(at(c, r))));
    return err;
}

std::vector<double> DensityMatrix::probabilities() const {
    std::vector<double> p(dim());
    for (std::size_t i = 0; i < dim(); ++i) p[i] = at(i, i).real();
    return p;
}

void apply_gate(DensityMatrix& rho, const Gate& g) {
    for (int t : g.targets)
        if (t < 0 || t >= rho.n_qubits()) throw Error("apply_gate: target out of range");
    const SmallMat u = g.matrix();
    apply_matrix_left(rho.data(), rho.n_qubits(), u, g.targets);
    apply_matrix_right_dag(rho.data(), rho.n_qubits(), u, g.targets);
}

void apply_depolarizing(DensityMatrix& rho, double p) {
    if (p < 0.0 || p > 1.0) throw Error("apply_depolarizing: p must be in [0, 1]");
    const std::size_t dim = rho.dim();
    active_ops().scale_real(rho.data(), dim * dim, p);
    const double add = (1.0 - p) / static_cast<double>(dim);
    for (std::size_t i = 0; i < dim; ++i) rho.at(i, i) += add;
}

void apply_local_depolarizing(DensityMatrix& rho, double p, int qubit) {
    if (p < 0.0 || p > 1.0) throw Error("apply_local_depolarizing: p must be in [0, 1]");
    if (qubit < 0 || qubit >= rho.n_qubits()) throw Error("apply_local_depolarizing: bad qubit");
    const auto& K = active_ops();
    const std::size_t dim = rho.dim();
    const std::size_t w = std::size_t{1} << qubit;
    // rho -> f rho + g (I_q/2 tensor Tr_q rho), f = 1 - 4p/3, g = 4p/3;
    // the diagonal blocks mix pairwise, the off-diagonal blocks just scale
    const double f = 1.0 - 4.0 * p / 3.0;
    const double g = 4.0 * p / 3.0;
    const cplx mix[4] = {f + g / 2.0, g / 2.0, g / 2.0, f + g / 2.0};

    for (std::size_t rbase = 0; rbase < dim; rbase += 2 * w)
        for (std::size_t r = rbase; r < rbase + w; ++r) {
            cplx* row0 = rho.data() + r * dim;
            cplx* row1 = rho.data() + (r + w) * dim;
            for (std::size_t c = 0; c < dim; c += 2 * w) {
                K.rotate2(row0 + c, row1 + c + w, w, mix);
                K.scale_real(row0 + c + w, w, f);
                K.scale_real(row1 + c, w, f);
            }
        }
}

void apply_amplitude_damping(DensityMatrix& rho, double gamma, int qubit) {
    if (gamma < 0.0 || gamma > 1.0) throw Error("apply_amplitude_damping: gamma must be in [0, 1]");
    if (qubit < 0 || qubit >= rho.n_qubits()) throw Error("apply_amplitude_damping: bad qubit");
    const auto& K = active_ops();
    const std::size_t dim = rho.dim();
    const std::size_t w = std::size_t{1} << qubit;
    const double s = std::sqrt(1.0 - gamma);

    // K0 = diag(1, s), K1 = sqrt(gamma) |0><1| on the target qubit:
    //   block 00 += gamma * block 11; blocks 01, 10 *= s; block 11 *= 1-gamma
    for (std::size_t rbase = 0; rbase < dim; rbase += 2 * w)
        for (std::size_t r = rbase; r < rbase + w; ++r) {
            cplx* row0 = rho.data() + r * dim;
            cplx* row1 = rho.data() + (r + w) * dim;
            for (std::size_t c = 0; c < dim; c += 2 * w) {
                K.axpy_real(row0 + c, row1 + c + w, w, gamma);
                K.scale_real(row0 + c + w, w, s);
                K.scale_real(row1 + c, w, s);
                K.scale_real(row1 + c + w, w, 1.0 - gamma);
            }
        }
}

double angle_noise_q(double sigma2) {
    if (sigma2 < 0.0) throw Error("angle_noise_q: sigma2 must be >= 0");
    return 0.5 * (1.0 - std::exp(-2.0 * sigma2));
}

void apply_angle_noise_channel(DensityMatrix& rho, const SmallMat& h, double sigma2,
                               const std::vector<int>& targets) {
    SmallMat h2 = matmul(h, h);
    double err = 0.0;
    for (int i = 0; i < h2.dim; ++i)
        for (int j = 0; j < h2.dim; ++j) {
            cplx expect = (i == j) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
            err = std::max(err, std::abs(h2.at(i, j) - expect));
        }
    if (err > 1e-10) throw Error("apply_angle_noise_channel: h is not an involution");

    const double q = angle_noise_q(sigma2);
    if (q == 0.0) return;

    const std::size_t len = rho.dim() * rho.dim();
    std::vector<cplx> mixed(rho.data(), rho.data() + len);
    apply_matrix_left(mixed.data(), rho.n_qubits(), h, targets);
    apply_matrix_right_dag(mixed.data(), rho.n_qubits(), h, targets);
    active_ops().scale_real(rho.data(), len, 1.0 - q);
    active_ops().axpy_real(rho.data(), mixed.data(), len, q);
}

}  // namespace zne
