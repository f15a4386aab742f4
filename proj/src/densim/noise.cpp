#include "zne/noise.hpp"

#include <cmath>

#include "zne/errors.hpp"

namespace zne {

NoiseModel NoiseModel::global_depolarizing_per_layer(double keep) {
    NoiseModel nm;
    nm.dep_mode = DepolarizingMode::GlobalPerLayer;
    nm.dep_keep = keep;
    return nm;
}

NoiseModel NoiseModel::global_depolarizing_per_gate(double keep) {
    NoiseModel nm;
    nm.dep_mode = DepolarizingMode::GlobalPerGate;
    nm.dep_keep = keep;
    return nm;
}

NoiseModel NoiseModel::local_depolarizing_per_layer(double p) {
    NoiseModel nm;
    nm.dep_mode = DepolarizingMode::LocalPerQubitPerLayer;
    nm.dep_local_p = p;
    return nm;
}

NoiseModel NoiseModel::amplitude_damping(double gamma) {
    NoiseModel nm;
    nm.amp_damping_gamma = gamma;
    return nm;
}

NoiseModel NoiseModel::angle_noise(double sigma2) {
    NoiseModel nm;
    nm.angle_sigma2 = sigma2;
    return nm;
}

NoiseModel NoiseModel::scaled_by(double lambda) const {
    if (!(lambda >= 0.0)) throw Error("NoiseModel::scaled_by: lambda must be >= 0");
    NoiseModel nm = *this;
    nm.dep_keep = std::pow(dep_keep, lambda);
    if (dep_local_p > 0.0) {
        // scale the decay rate of the Pauli-transfer factor 1 - 4p/3
        const double f = 1.0 - 4.0 * dep_local_p / 3.0;
        if (f <= 0.0) throw Error("NoiseModel::scaled_by: local p too large to scale");
        nm.dep_local_p = 0.75 * (1.0 - std::pow(f, lambda));
    }
    nm.amp_damping_gamma = 1.0 - std::pow(1.0 - amp_damping_gamma, lambda);
    nm.angle_sigma2 = lambda * angle_sigma2;
    return nm;
}

}  // namespace zne
