#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zne/curve.hpp"

namespace zne {

// Zero-noise estimate. `params` holds the model coefficients: polynomial
// coefficients low-to-high for the polynomial family, Lagrange weights for
// richardson, {a, sign, z_0..z_d} for polyexp, {a, b, c} for exp.
struct Estimate {
    double value = 0.0;
    std::vector<double> params;
    std::optional<double> variance;
    std::string model;
    bool fit_warning = false;
};

// Weighted least-squares fit of c_0 + c_1 l + ... + c_d l^d; weights 1/sigma^2
// when every point carries a sigma, unweighted otherwise. The intercept c_0
// is the estimate; its variance comes from the linear-model covariance when
// sigmas are present. Requires at least d+1 points with d+1 distinct lambdas.
Estimate fit_polynomial(const NoiseCurve& curve, int degree);

// Closed-form least-squares intercept of a straight line (sums form), with
// the textbook intercept variance when sigmas are present. Matches
// fit_polynomial(curve, 1) to rounding.
Estimate extrapolate_linear(const NoiseCurve& curve);

// Interpolating-polynomial estimator: value = sum_k y_k prod_{i!=k}
// lambda_i / (lambda_i - lambda_k). Requires all lambdas distinct. The
// variance is sum w_k^2 sigma_k^2 when sigmas are present.
Estimate extrapolate_richardson(const NoiseCurve& curve);

// Variance growth law sigma2 * (C(2m, m) - 1) of the Richardson estimator
// for m equispaced scale factors lambda_k = k * lambda_1.
double richardson_variance(int m, double sigma2);

struct PolyexpOptions {
    double epsilon = 1e-12;  // log-space regularizer
    // weight log-space points by (y-a)^2/sigma^2 (error propagation through
    // the log); off by default
    bool weighted = false;
    int max_iterations = 200;   // nonlinear fit budget when a is unknown
    double rel_tolerance = 1e-10;
};

// Ansatz a + sign * exp(z(lambda)) with polynomial z of degree d. With a
// known: 4-step log-space procedure (transform, polynomial fit, extrapolate,
// back-transform); sign is the majority sign of y_k - a, ties toward +.
// With a unknown: damped Gauss-Newton seeded by the log-space solution with
// a initialized to the y at the largest lambda.
Estimate extrapolate_polyexp(const NoiseCurve& curve, int degree, std::optional<double> a,
                             const PolyexpOptions& options = {});

// Exponential model a + b exp(-c lambda); the degree-1 poly-exponential with
// params repackaged as {a, b, c}.
Estimate extrapolate_exp(const NoiseCurve& curve, std::optional<double> a,
                         const PolyexpOptions& options = {});

}  // namespace zne
