#pragma once

#include <cstdint>

#include "zne/circuit.hpp"

namespace zne {

// Classical-noise injection into gate parameters. sigma2 is the variance of
// the base stochastic generator-angle error eps (the eps of the noisy factor
// exp(-i eps P)); scaling to lambda injects an independent draw of variance
// (lambda - 1) sigma2 per parametric gate, bringing the total to
// lambda sigma2.
struct ParamNoiseSpec {
    double sigma2 = 0.0;
    double lambda = 1.0;
    std::uint64_t seed = 0;
};

// Every parametric gate's angle is shifted by 2 eps with eps an independent
// Gaussian of variance (lambda - 1) sigma2 (the factor 2 converts the
// generator angle to the rotation angle of exp(-i theta P / 2)).
// Non-parametric gates are untouched. Deterministic under the seed.
Circuit scale_parameters(const Circuit& c, const ParamNoiseSpec& spec);

// Mixing probability of the angle-noise channel at total variance
// lambda * sigma2: Q = (1 - exp(-2 lambda sigma2)) / 2.
double effective_q(double sigma2, double lambda);

}  // namespace zne
