#pragma once

#include <cstdint>

namespace zne {

enum class DepolarizingMode : std::uint8_t {
    None,
    GlobalPerLayer,          // whole-register channel once after each layer
    GlobalPerGate,           // same channel once after each gate
    LocalPerQubitPerLayer,   // standard 1q depolarizing on every qubit after each layer
};

// Parameterizable per-circuit noise. Zero strengths mean the channel is off;
// the default-constructed model is noiseless.
struct NoiseModel {
    DepolarizingMode dep_mode = DepolarizingMode::None;
    // keep probability for the global modes (1 = noiseless, 0 = fully mixed)
    double dep_keep = 1.0;
    // error probability for the local mode (0 = noiseless)
    double dep_local_p = 0.0;

    // amplitude damping per qubit after every layer; 0 = off
    double amp_damping_gamma = 0.0;

    // variance of the stochastic generator-angle error of parametric gates,
    // i.e. of eps in the noisy factor exp(-i eps P); 0 = off. An angle-domain
    // deviation delta on R(theta) = exp(-i theta P / 2) corresponds to
    // eps = delta / 2.
    double angle_sigma2 = 0.0;

    bool noiseless() const {
        return (dep_mode == DepolarizingMode::None || (dep_keep == 1.0 && dep_local_p == 0.0)) &&
               amp_damping_gamma == 0.0 && angle_sigma2 == 0.0;
    }

    static NoiseModel none() { return {}; }
    static NoiseModel global_depolarizing_per_layer(double keep);
    static NoiseModel global_depolarizing_per_gate(double keep);
    static NoiseModel local_depolarizing_per_layer(double p);
    static NoiseModel amplitude_damping(double gamma);
    static NoiseModel angle_noise(double sigma2);

    // Direct back-end noise scaling: multiplies every dissipative rate by
    // lambda (keep probabilities exponentiate, gamma follows the decay law,
    // the Gaussian angle variance is additive).
    NoiseModel scaled_by(double lambda) const;
};

}  // namespace zne
