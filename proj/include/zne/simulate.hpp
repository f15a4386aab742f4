#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "zne/density_matrix.hpp"
#include "zne/noise.hpp"

namespace zne {

// Either a computational-basis projector |bits><bits| or an explicit
// Hermitian matrix.
class Observable {
  public:
    static Observable projector(std::uint64_t bits);
    static Observable dense(std::vector<cplx> matrix, int n_qubits);

    bool is_projector() const { return dense_.empty(); }
    std::uint64_t projector_bits() const { return bits_; }

    double expectation(const DensityMatrix& rho) const;

  private:
    Observable() = default;
    std::uint64_t bits_ = 0;
    std::vector<cplx> dense_;  // row-major, dim^2 entries when non-empty
    std::size_t dense_dim_ = 0;
};

// Applies the circuit layer by layer to `initial` (|0...0> when absent) under
// the noise model and returns the final state. Channel order per layer:
// gate unitaries (each parametric gate followed by its angle-noise channel,
// each gate followed by the per-gate depolarizing channel when that mode is
// on), then per-layer depolarizing, then amplitude damping on every qubit.
DensityMatrix simulate_state(const Circuit& c, const NoiseModel& nm,
                             const DensityMatrix* initial = nullptr);

// Tr(O rho_final); exact and deterministic.
double simulate_expectation(const Circuit& c, const NoiseModel& nm, const Observable& obs,
                            const DensityMatrix* initial = nullptr);

// Computational-basis outcome distribution of the final state.
std::vector<double> simulate_probabilities(const Circuit& c, const NoiseModel& nm,
                                           const DensityMatrix* initial = nullptr);

// Unbiased N-shot estimate of a projector expectation (Bernoulli sampling
// from the exact outcome probability). Non-projector observables are
// rejected; use gaussian_noise_executor for those.
double sample_expectation(const Circuit& c, const NoiseModel& nm, const Observable& obs, long shots,
                          std::uint64_t seed, const DensityMatrix* initial = nullptr);

// Exact expectation plus Gaussian noise of variance sigma0^2 / shots; the
// executor used by the adaptive experiments where sigma0 is assumed known.
double gaussian_noise_executor(const Circuit& c, const NoiseModel& nm, const Observable& obs,
                               double sigma0, long shots, std::uint64_t seed,
                               const DensityMatrix* initial = nullptr);

}  // namespace zne
