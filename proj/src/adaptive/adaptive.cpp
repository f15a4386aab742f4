#include "zne/adaptive.hpp"

#include <algorithm>
#include <cmath>

#include "zne/errors.hpp"

namespace zne {

double solve_alpha() {
    static const double alpha = [] {
        auto g = [](double x) { return std::exp(x) * (x - 1.0) - 1.0; };
        double lo = 1.0, hi = 2.0;  // g(1) = -1 < 0, g(2) > 0
        while (hi - lo > 1e-12) {
            const double mid = 0.5 * (lo + hi);
            (g(mid) <= 0.0 ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }();
    return alpha;
}

std::pair<double, double> two_point_exp_fit(double lambda1, double y1, double lambda2, double y2,
                                            double a) {
    if (lambda1 == lambda2) throw EstimationError("two_point_exp_fit: equal scale factors");
    const double r1 = y1 - a;
    const double r2 = y2 - a;
    if (r1 == 0.0 || r2 == 0.0 || (r1 > 0.0) != (r2 > 0.0))
        throw EstimationError("two_point_exp_fit: residuals must share a strict sign");

    const double gap = lambda2 - lambda1;
    const double c = std::log(r1 / r2) / gap;
    // |b| from the interpolation identity, sign from the residuals
    const double b = (r1 > 0.0 ? 1.0 : -1.0) *
                     std::pow(std::abs(r1), lambda2 / gap) * std::pow(std::abs(r2), -lambda1 / gap);
    return {b, c};
}

double mse_b(double lambda1, double lambda2, long n1, long n2, double c, double sigma0_sq) {
    if (n1 < 1 || n2 < 1) throw Error("mse_b: sample counts must be >= 1");
    if (!(lambda2 > lambda1)) throw Error("mse_b: lambda2 must exceed lambda1");
    const double gap = lambda2 - lambda1;
    return sigma0_sq / (gap * gap) *
           (lambda2 * lambda2 * std::exp(2.0 * c * lambda1) / static_cast<double>(n1) +
            lambda1 * lambda1 * std::exp(2.0 * c * lambda2) / static_cast<double>(n2));
}

namespace {

// floor both shares, give the leftover to the larger fractional part, keep
// both at least 1 while conserving the total
std::pair<long, long> round_split(double f1, double f2, long total) {
    long n1 = static_cast<long>(std::floor(f1));
    long n2 = static_cast<long>(std::floor(f2));
    long left = total - n1 - n2;
    const double frac1 = f1 - std::floor(f1);
    const double frac2 = f2 - std::floor(f2);
    while (left > 0) {
        if (frac1 >= frac2) ++n1; else ++n2;
        --left;
    }
    if (n1 < 1) { n2 -= (1 - n1); n1 = 1; }
    if (n2 < 1) { n1 -= (1 - n2); n2 = 1; }
    if (n1 < 1 || n2 < 1) throw Error("round_split: budget too small to split");
    return {n1, n2};
}

}  // namespace

std::pair<long, long> optimal_allocation(double lambda1, double lambda2, double c, long n_max) {
    if (!(lambda2 > lambda1) || !(lambda1 >= 1.0)) throw Error("optimal_allocation: bad scale factors");
    if (n_max < 2) throw Error("optimal_allocation: n_max must be >= 2");
    // minimizer of mse_b over n1 + n2 = n_max: shares proportional to the
    // square roots of the per-point coefficients, i.e.
    // n1 : n2 = lambda2 e^{c lambda1} : lambda1 e^{c lambda2}.
    // Computed through logs so large c cannot overflow.
    const double la = std::log(lambda2) + c * lambda1;
    const double lb = std::log(lambda1) + c * lambda2;
    const double share1 = 1.0 / (1.0 + std::exp(lb - la));
    const double f1 = static_cast<double>(n_max) * share1;
    const double f2 = static_cast<double>(n_max) * (1.0 - share1);
    return round_split(f1, f2, n_max);
}

std::pair<double, double> exp_fit_known_a(const NoiseCurve& data, double a) {
    int pos = 0, neg = 0;
    for (const CurvePoint& p : data.points) {
        if (p.y - a > 0.0) ++pos;
        else if (p.y - a < 0.0) ++neg;
    }
    const double sign = pos >= neg ? 1.0 : -1.0;

    // weighted line fit in log space over the majority-sign points
    long double sw = 0, swx = 0, swy = 0, swxx = 0, swxy = 0;
    double lmin = 0, lmax = 0;
    bool first = true;
    for (const CurvePoint& p : data.points) {
        const double r = (p.y - a) * sign;
        if (r <= 0.0) continue;
        const double shots = p.shots > 0 ? static_cast<double>(p.shots) : 1.0;
        const long double w = static_cast<long double>(shots) * r * r;
        const double ylog = std::log(r);
        sw += w;
        swx += w * p.lambda;
        swy += w * ylog;
        swxx += w * p.lambda * p.lambda;
        swxy += w * p.lambda * ylog;
        if (first || p.lambda < lmin) lmin = p.lambda;
        if (first || p.lambda > lmax) lmax = p.lambda;
        first = false;
    }
    const long double det = sw * swxx - swx * swx;
    if (first || lmin == lmax || !(std::abs(det) > 1e-14L * std::max<long double>(sw * swxx, 1e-300L)))
        throw EstimationError("exp_fit_known_a: need two usable points with distinct lambdas");

    const double z1 = static_cast<double>((sw * swxy - swx * swy) / det);
    const double z0 = static_cast<double>((swy - z1 * swx) / sw);
    return {sign * std::exp(z0), -z1};  // (b, c)
}

AdaptiveOutcome adaptive_exp_extrapolate(const Executor& executor, const AdaptiveConfig& config) {
    if (config.n_max < 1 || config.n_batch < 2 || config.n_batch > config.n_max)
        throw ConfigError("adaptive_exp_extrapolate: need 2 <= n_batch <= n_max");
    if (!(config.lambda1 >= 1.0)) throw ConfigError("adaptive_exp_extrapolate: lambda1 must be >= 1");

    const double alpha = solve_alpha();
    auto clamp_c = [&](double c) { return std::min(config.c_max, std::max(config.c_min, c)); };

    AdaptiveOutcome out;
    double c = clamp_c(config.c_init);
    double b = 0.0;
    bool have_fit = false;

    while (out.n_used < config.n_max) {
        double lambda2 = config.lambda1 + alpha / c;
        if (config.lambda_cap) lambda2 = std::min(lambda2, *config.lambda_cap);

        // split the per-iteration budget by the optimal-allocation rule at
        // the chosen pair of scale factors
        const auto [n1, n2] = optimal_allocation(config.lambda1, lambda2, c, config.n_batch);

        const double y1 = executor(config.lambda1, n1);
        const double y2 = executor(lambda2, n2);
        out.data.add(config.lambda1, y1, n1);
        out.data.add(lambda2, y2, n2);
        out.n_used += n1 + n2;
        ++out.iterations;

        try {
            auto [b_hat, c_hat] = exp_fit_known_a(out.data, config.a);
            b = b_hat;
            c = clamp_c(c_hat);
            have_fit = true;
        } catch (const EstimationError&) {
            ++out.fit_failures;  // keep the previous c
        }
    }
    if (!have_fit) throw EstimationError("adaptive_exp_extrapolate: no successful fit");

    out.estimate.value = config.a + b;
    out.estimate.params = {config.a, b, c};
    out.estimate.model = "exp";
    out.estimate.fit_warning = out.fit_failures > 0;
    if (config.sigma0_sq) {
        const double lambda2 = config.lambda1 + alpha / c;
        const auto [n1, n2] = optimal_allocation(config.lambda1, lambda2, c, std::max<long>(2, out.n_used));
        out.estimate.variance = mse_b(config.lambda1, lambda2, n1, n2, c, *config.sigma0_sq);
    }
    return out;
}

AdaptiveOutcome generic_adaptive(const Executor& executor, const AdaptiveModel& model,
                                 const std::vector<double>& initial_lambdas,
                                 const std::vector<long>& initial_shots, long n_max,
                                 const ScalePolicy& new_scale, const SamplesPolicy& new_samples) {
    if (initial_lambdas.size() != initial_shots.size() || initial_lambdas.empty())
        throw ConfigError("generic_adaptive: initial lambdas and shot counts must match");

    AdaptiveOutcome out;
    for (std::size_t j = 0; j < initial_lambdas.size(); ++j) {
        if (!(initial_lambdas[j] >= 1.0)) throw ConfigError("generic_adaptive: lambda must be >= 1");
        const double y = executor(initial_lambdas[j], initial_shots[j]);
        out.data.add(initial_lambdas[j], y, initial_shots[j]);
    }

    // the adaptive budget counts only samples taken inside the loop
    Estimate fit;
    while (out.n_used < n_max) {
        fit = model.best_fit(out.data);
        const double lambda_next = new_scale(fit, out.data);
        if (!(lambda_next >= 1.0)) throw EstimationError("generic_adaptive: policy chose lambda < 1");
        const long n_next = new_samples(fit, out.data);
        if (n_next < 1) throw EstimationError("generic_adaptive: policy chose an empty batch");
        const double y = executor(lambda_next, n_next);
        out.data.add(lambda_next, y, n_next);
        out.n_used += n_next;
        ++out.iterations;
    }
    out.estimate = model.best_fit(out.data);
    return out;
}

}  // namespace zne
