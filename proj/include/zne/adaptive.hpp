#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "zne/curve.hpp"
#include "zne/extrapolate.hpp"

namespace zne {

// Measurement source for the adaptive loops: returns an unbiased estimate of
// E(lambda) from `shots` samples (variance sigma0^2 / shots).
using Executor = std::function<double(double lambda, long shots)>;

struct AdaptiveConfig {
    double a = 0.0;            // known asymptote of the exponential model
    long n_max = 0;            // total sample budget
    long n_batch = 0;          // samples spent per iteration
    double lambda1 = 1.0;      // smallest scale factor
    double c_init = 1.0;       // initial guess for the decay rate
    double c_min = 1e-6;       // clamp bounds for the re-estimated c
    double c_max = 1e3;
    std::optional<double> lambda_cap;    // optional upper bound on lambda2
    std::optional<double> sigma0_sq;     // single-shot variance when known
};

struct AdaptiveOutcome {
    Estimate estimate;
    NoiseCurve data;       // every measurement in acquisition order
    long n_used = 0;
    int iterations = 0;
    int fit_failures = 0;  // refits that kept the previous c
};

// Root of exp(x)(x - 1) - 1 = 0 on x > 0 via bracketed bisection; the optimal
// two-point spacing satisfies c (lambda2 - lambda1) = alpha.
double solve_alpha();

// Parameters of the unique exponential a + b exp(-c lambda) through two
// points. Requires lambda2 != lambda1 and both residuals y - a of the same
// strict sign; otherwise throws EstimationError.
std::pair<double, double> two_point_exp_fit(double lambda1, double y1, double lambda2, double y2,
                                            double a);

// Leading-order mean squared error of the two-point b estimator.
double mse_b(double lambda1, double lambda2, long n1, long n2, double c, double sigma0_sq);

// Split of n_max between the two scale factors minimizing mse_b; real-valued
// allocation floored with the remainder going to the larger fractional part,
// each side at least 1.
std::pair<long, long> optimal_allocation(double lambda1, double lambda2, double c, long n_max);

// Weighted exponential fit with known asymptote used by the adaptive loops:
// log-space line fit over the majority-sign points, weights N (y - a)^2.
// Returns (b, c); throws EstimationError when fewer than two usable points
// with distinct lambdas remain.
std::pair<double, double> exp_fit_known_a(const NoiseCurve& data, double a);

// Two measurements per iteration at (lambda1, lambda2 = lambda1 + alpha/c)
// with the per-iteration budget split by the optimal-allocation rule; c is
// re-estimated from all accumulated data after each iteration and the final
// answer is the best fit over everything measured.
AdaptiveOutcome adaptive_exp_extrapolate(const Executor& executor, const AdaptiveConfig& config);

// Pluggable-policy loop: initial measurements, then repeatedly fit, pick the
// next scale factor and sample count, measure, append, until the adaptive
// budget is spent (initial samples are not counted against it). A final fit
// over all data produces the returned estimate. Repeated lambdas merge
// through the fit weights.
struct AdaptiveModel {
    std::function<Estimate(const NoiseCurve&)> best_fit;
};
using ScalePolicy = std::function<double(const Estimate&, const NoiseCurve&)>;
using SamplesPolicy = std::function<long(const Estimate&, const NoiseCurve&)>;

AdaptiveOutcome generic_adaptive(const Executor& executor, const AdaptiveModel& model,
                                 const std::vector<double>& initial_lambdas,
                                 const std::vector<long>& initial_shots, long n_max,
                                 const ScalePolicy& new_scale, const SamplesPolicy& new_samples);

}  // namespace zne
