#include "zne/param_scale.hpp"

#include <cmath>

#include "zne/errors.hpp"
#include "zne/rng.hpp"

namespace zne {

Circuit scale_parameters(const Circuit& c, const ParamNoiseSpec& spec) {
    if (!(spec.lambda >= 1.0)) throw Error("scale_parameters: lambda must be >= 1");
    if (spec.sigma2 < 0.0) throw Error("scale_parameters: sigma2 must be >= 0");

    const double stddev = std::sqrt((spec.lambda - 1.0) * spec.sigma2);
    Circuit out = c;
    if (stddev == 0.0) return out;

    Rng rng(spec.seed);
    for (Layer& layer : out.layers)
        for (Gate& g : layer.gates)
            if (gate_is_parametric(g.kind)) g.params[0] += 2.0 * rng.gaussian(0.0, stddev);
    return out;
}

double effective_q(double sigma2, double lambda) {
    if (sigma2 < 0.0 || lambda < 0.0) throw Error("effective_q: arguments must be >= 0");
    return 0.5 * (1.0 - std::exp(-2.0 * lambda * sigma2));
}

}  // namespace zne
