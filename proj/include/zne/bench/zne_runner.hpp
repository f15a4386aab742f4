#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zne/adaptive.hpp"
#include "zne/extrapolate.hpp"
#include "zne/fold.hpp"
#include "zne/noise.hpp"
#include "zne/simulate.hpp"

namespace zne::bench {

enum class ScalingMethod {
    Circuit,    // global circuit folding
    FromLeft,   // layer folding, subset from the left
    FromRight,
    AtRandom,
    Parameter,  // classical noise injection into gate angles
    Direct,     // back-end dissipative-rate scaling
};

ScalingMethod scaling_from_name(const std::string& name);
std::string scaling_name(ScalingMethod m);

struct ExtrapolatorSpec {
    std::string method = "linear";  // linear | poly | richardson | exp | polyexp | adaptive_exp
    int degree = 1;                 // poly / polyexp only
    std::optional<double> asymptote;
};

struct ZneOptions {
    ScalingMethod scaling = ScalingMethod::Circuit;
    std::vector<double> lambdas = {1.0, 1.5, 2.0, 2.5};
    ExtrapolatorSpec fit;
    long shots = 0;  // 0: exact density-matrix mode
    std::uint64_t seed = 0;

    // parameter scaling: base variance must match the model's angle_sigma2;
    // the expectation at lambda > 1 averages this many perturbed simulations
    double param_sigma2 = 0.0;
    int param_ensemble = 200;

    // adaptive-exponential settings (method == "adaptive_exp")
    long adaptive_n_batch = 1000;
    int adaptive_iterations = 3;
    double adaptive_lambda_cap = 8.0;
    double adaptive_c_init = 1.0;
};

struct ZneRun {
    Estimate estimate;
    NoiseCurve curve;                      // requested lambdas
    std::vector<double> realized_lambdas;  // grid-resolved values where folding applies
};

// Measurement of E(lambda) under one scaling method; exact values are
// memoized per lambda, shot mode draws fresh samples per call. The executor
// borrows the circuit: it must not outlive `c`.
Executor make_executor(const Circuit& c, const NoiseModel& nm, const Observable& obs,
                       ScalingMethod scaling, const ZneOptions& opt);

// lambda actually realizable for this circuit/scaling (folding snaps to the
// 1 + 2k/d grid; parameter and direct scaling are continuous)
double realized_lambda(const Circuit& c, ScalingMethod scaling, double lambda);

// Two-step ZNE: measure the curve at opt.lambdas (or adaptively), then fit.
ZneRun run_zne(const Circuit& c, const NoiseModel& nm, const Observable& obs, const ZneOptions& opt);

Estimate fit_curve(const NoiseCurve& curve, const ExtrapolatorSpec& spec);

}  // namespace zne::bench
