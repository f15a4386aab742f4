#include "zne/bench/zne_runner.hpp"

#include <cmath>
#include <cstring>
#include <map>
#include <memory>

#include "zne/errors.hpp"
#include "zne/param_scale.hpp"
#include "zne/rng.hpp"

namespace zne::bench {

ScalingMethod scaling_from_name(const std::string& name) {
    if (name == "circuit" || name == "global") return ScalingMethod::Circuit;
    if (name == "left" || name == "from_left") return ScalingMethod::FromLeft;
    if (name == "right" || name == "from_right") return ScalingMethod::FromRight;
    if (name == "random" || name == "at_random") return ScalingMethod::AtRandom;
    if (name == "parameter") return ScalingMethod::Parameter;
    if (name == "direct") return ScalingMethod::Direct;
    throw ConfigError("unknown scaling method '" + name + "'");
}

std::string scaling_name(ScalingMethod m) {
    switch (m) {
        case ScalingMethod::Circuit: return "circuit";
        case ScalingMethod::FromLeft: return "left";
        case ScalingMethod::FromRight: return "right";
        case ScalingMethod::AtRandom: return "random";
        case ScalingMethod::Parameter: return "parameter";
        case ScalingMethod::Direct: return "direct";
    }
    return "?";
}

double realized_lambda(const Circuit& c, ScalingMethod scaling, double lambda) {
    switch (scaling) {
        case ScalingMethod::Parameter:
        case ScalingMethod::Direct:
            return lambda;
        default:
            return resolve_fold(c.depth(), lambda).realized_lambda;
    }
}

namespace {

Circuit scaled_circuit(const Circuit& c, ScalingMethod scaling, double lambda, std::uint64_t seed) {
    switch (scaling) {
        case ScalingMethod::Circuit: return fold_global(c, lambda);
        case ScalingMethod::FromLeft: return fold_gates(c, lambda, FoldMethod::from_left());
        case ScalingMethod::FromRight: return fold_gates(c, lambda, FoldMethod::from_right());
        case ScalingMethod::AtRandom: return fold_gates(c, lambda, FoldMethod::at_random(seed));
        default: throw Error("scaled_circuit: not a folding method");
    }
}

}  // namespace

Executor make_executor(const Circuit& c, const NoiseModel& nm, const Observable& obs,
                       ScalingMethod scaling, const ZneOptions& opt) {
    struct State {
        std::map<double, double> exact_memo;
        std::uint64_t draw = 0;
    };
    auto state = std::make_shared<State>();

    return [&c, nm, obs, scaling, opt, state](double lambda, long shots) -> double {
        if (!(lambda >= 1.0)) throw Error("executor: lambda must be >= 1");

        auto exact_value = [&]() -> double {
            auto it = state->exact_memo.find(lambda);
            if (it != state->exact_memo.end()) return it->second;
            double value = 0.0;
            switch (scaling) {
                case ScalingMethod::Direct:
                    value = simulate_expectation(c, nm.scaled_by(lambda), obs);
                    break;
                case ScalingMethod::Parameter: {
                    if (lambda == 1.0 || opt.param_sigma2 == 0.0) {
                        value = simulate_expectation(c, nm, obs);
                    } else {
                        std::uint64_t lambda_bits;
                        std::memcpy(&lambda_bits, &lambda, sizeof lambda_bits);
                        double sum = 0.0;
                        for (int k = 0; k < opt.param_ensemble; ++k) {
                            ParamNoiseSpec spec{opt.param_sigma2, lambda,
                                                derive_seed(opt.seed, 0xb017ull ^ lambda_bits, static_cast<std::uint64_t>(k))};
                            sum += simulate_expectation(scale_parameters(c, spec), nm, obs);
                        }
                        value = sum / static_cast<double>(opt.param_ensemble);
                    }
                    break;
                }
                default:
                    value = simulate_expectation(
                        scaled_circuit(c, scaling, lambda, derive_seed(opt.seed, 0xf01d)), nm, obs);
                    break;
            }
            state->exact_memo.emplace(lambda, value);
            return value;
        };

        if (opt.shots == 0) {
            (void)shots;
            return exact_value();
        }
        // shot mode: Bernoulli sampling of the projector outcome
        const double p = std::min(1.0, std::max(0.0, exact_value()));
        Rng rng(derive_seed(opt.seed, 0x5a3d, state->draw++));
        long hits = 0;
        for (long i = 0; i < shots; ++i)
            if (rng.uniform() < p) ++hits;
        return static_cast<double>(hits) / static_cast<double>(shots);
    };
}

Estimate fit_curve(const NoiseCurve& curve, const ExtrapolatorSpec& spec) {
    if (spec.method == "linear") return extrapolate_linear(curve);
    if (spec.method == "poly") return fit_polynomial(curve, spec.degree);
    if (spec.method == "richardson") return extrapolate_richardson(curve);
    if (spec.method == "exp") return extrapolate_exp(curve, spec.asymptote);
    if (spec.method == "polyexp") return extrapolate_polyexp(curve, spec.degree, spec.asymptote);
    throw ConfigError("unknown extrapolation method '" + spec.method + "'");
}

ZneRun run_zne(const Circuit& c, const NoiseModel& nm, const Observable& obs, const ZneOptions& opt) {
    ZneRun out;
    Executor ex = make_executor(c, nm, obs, opt.scaling, opt);

    if (opt.fit.method == "adaptive_exp") {
        if (!opt.fit.asymptote) throw ConfigError("adaptive_exp requires a known asymptote");
        AdaptiveConfig cfg;
        cfg.a = *opt.fit.asymptote;
        cfg.n_batch = opt.adaptive_n_batch;
        cfg.n_max = opt.adaptive_n_batch * opt.adaptive_iterations;
        cfg.c_init = opt.adaptive_c_init;
        cfg.lambda_cap = opt.adaptive_lambda_cap;
        AdaptiveOutcome outcome = adaptive_exp_extrapolate(ex, cfg);
        out.estimate = outcome.estimate;
        out.curve = outcome.data;
        for (const CurvePoint& p : out.curve.points)
            out.realized_lambdas.push_back(realized_lambda(c, opt.scaling, p.lambda));
        return out;
    }

    for (double lambda : opt.lambdas) {
        const double y = ex(lambda, opt.shots > 0 ? opt.shots : 1);
        out.curve.add(lambda, y, opt.shots);
        out.realized_lambdas.push_back(realized_lambda(c, opt.scaling, lambda));
    }
    out.estimate = fit_curve(out.curve, opt.fit);
    return out;
}

}  // namespace zne::bench
