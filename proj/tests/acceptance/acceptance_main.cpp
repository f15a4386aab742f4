// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Each criterion pins its thresholds in code; none defer to configuration.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "../test_util.hpp"
#include "zne/adaptive.hpp"
#include "zne/bench/generators.hpp"
#include "zne/bench/scenarios.hpp"
#include "zne/extrapolate.hpp"
#include "zne/fold.hpp"
#include "zne/param_scale.hpp"
#include "zne/rng.hpp"
#include "zne/simulate.hpp"

using namespace zne;
using namespace zne::bench;

namespace {

int g_failures = 0;

void report(int idx, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", idx, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof buf, f, args);
    va_end(args);
    return buf;
}

// 1. Table II reproduction at desk scale
void criterion_table2() {
    Table2Config cfg;  // 20 circuits, depth 27, lambdas {1, 1.5, 2, 2.5}
    cfg.scalings = {"circuit"};
    const Table2Result r = run_table2(cfg);

    const Table2Summary* unmit = r.find("none", "unmitigated");
    const Table2Summary* quad = r.find("circuit", "quadratic");
    const Table2Summary* expo = r.find("circuit", "exponential");
    const Table2Summary* lin = r.find("circuit", "linear");
    const Table2Summary* adapt = r.find("circuit", "adaptive_exp");

    bool pass = unmit && quad && expo && lin && adapt;
    std::string detail = "missing cells";
    if (pass) {
        const bool unmit_ok = unmit->dep_mean >= 22.3 && unmit->dep_mean <= 37.6;
        const bool quad_ok = quad->dep_mean >= 0.95 && quad->dep_mean <= 11.8;
        const bool exp_ok = expo->dep_mean >= 0.0 && expo->dep_mean <= 5.6;
        const bool ordering = lin->dep_mean < unmit->dep_mean && quad->dep_mean < unmit->dep_mean &&
                              expo->dep_mean < unmit->dep_mean && adapt->dep_mean < unmit->dep_mean;
        pass = unmit_ok && quad_ok && exp_ok && ordering;
        detail = fmt("unmitigated %.1f in [22.3,37.6]; quadratic %.2f in [0.95,11.8]; "
                     "exponential %.2f in [0,5.6]; ordering %s",
                     unmit->dep_mean, quad->dep_mean, expo->dep_mean, ordering ? "ok" : "violated");
    }
    report(1, "Table II cells and ordering", pass, detail);
}

// 2. RB decay parameters with and without mitigation
void criterion_rb_decay() {
    const auto t0 = std::chrono::steady_clock::now();
    RbDecayConfig cfg;
    const RbDecayResult r = run_rb_decay(cfg);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const bool unmit_ok = std::abs(r.decay_unmitigated - 0.979) <= 0.005;
    const bool mit_ok = std::abs(r.decay_mitigated - 0.990) <= 0.005;
    const bool time_ok = secs < 300.0;
    report(2, "RB decay 0.979 -> 0.990", unmit_ok && mit_ok && time_ok,
           fmt("unmitigated %.4f (0.979 +- 0.005), mitigated %.4f (0.990 +- 0.005), %.0f s",
               r.decay_unmitigated, r.decay_mitigated, secs));
}

// 3. six-qubit distribution errors
void criterion_random6() {
    Random6Config cfg;  // K = 50
    const Random6Result r = run_random6_study(cfg);
    const bool mit_ok = r.mean_mitigated >= 0.04 && r.mean_mitigated <= 0.11;
    const bool unmit_ok = r.mean_unmitigated >= 0.064 && r.mean_unmitigated <= 0.164;
    const bool ratio_ok = r.mean_improvement > 1.0;
    report(3, "random 6-qubit L2 errors", mit_ok && unmit_ok && ratio_ok,
           fmt("mitigated %.3f in [0.04,0.11], unmitigated %.3f in [0.064,0.164], improvement %.2fx",
               r.mean_mitigated, r.mean_unmitigated, r.mean_improvement));
}

// 4. exactness of the depolarizing-folding law
void criterion_depolarizing_exactness() {
    bool pass = true;
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Circuit c = generate_rb_circuit(2, 12 + 3 * static_cast<int>(seed), 900 + seed);
        const Observable obs = Observable::projector(0);
        const NoiseModel nm = NoiseModel::global_depolarizing_per_layer(0.99);
        const double noiseless = simulate_expectation(c, NoiseModel::none(), obs);
        NoiseCurve curve;
        for (double lambda : {1.0, 3.0, 5.0})
            curve.add(lambda, simulate_expectation(fold_global(c, lambda), nm, obs));
        const double err = std::abs(extrapolate_exp(curve, 0.25).value - noiseless);
        worst = std::max(worst, err);
        pass = pass && err < 1e-6;
    }
    report(4, "exponential law exact at odd lambda", pass, fmt("max |error| %.2e < 1e-6", worst));
}

// 5. the optimal-spacing constant
void criterion_alpha() {
    const double alpha = solve_alpha();
    const double resid = std::abs(std::exp(alpha) * (alpha - 1.0) - 1.0);
    const bool pass = std::abs(alpha - 1.27846) <= 1e-5 && resid <= 1e-9;
    report(5, "alpha constant", pass, fmt("alpha %.6f, residual %.1e", alpha, resid));
}

// 6. Richardson variance growth law
void criterion_richardson_variance() {
    Rng rng(20260810);
    const double sigma = 0.05;
    bool pass = true;
    std::string detail;
    for (int m : {2, 3, 4}) {
        const int trials = 2000;
        double mean = 0.0, m2 = 0.0;
        for (int t = 0; t < trials; ++t) {
            NoiseCurve c;
            for (int k = 1; k <= m; ++k) c.add(k, 0.5 + rng.gaussian(0.0, sigma));
            const double v = extrapolate_richardson(c).value;
            const double d = v - mean;
            mean += d / (t + 1);
            m2 += d * (v - mean);
        }
        const double var = m2 / (trials - 1);
        const double expect = richardson_variance(m, sigma * sigma);
        const double rel = std::abs(var - expect) / expect;
        pass = pass && rel < 0.10;
        detail += fmt("m=%d rel %.3f; ", m, rel);
    }
    report(6, "Richardson variance law within 10%", pass, detail);
}

// 7. angle-noise channel equals the Monte-Carlo average
void criterion_angle_noise() {
    bool pass = true;
    std::string detail;
    for (double sigma2 : {0.001, 0.01}) {
        DensityMatrix base = DensityMatrix::basis_state(1, 0);
        apply_gate(base, Gate{GateKind::H, {0}, {}});
        DensityMatrix analytic = base;
        apply_angle_noise_channel(analytic, gate_matrix(GateKind::Z, {}), sigma2, {0});

        const int samples = 10000;
        Rng rng(31337 + static_cast<std::uint64_t>(sigma2 * 1e5));
        double mean = 0.0, m2 = 0.0;
        for (int k = 0; k < samples; ++k) {
            DensityMatrix draw = base;
            apply_gate(draw, Gate{GateKind::RZ, {0}, {2.0 * rng.gaussian(0.0, std::sqrt(sigma2))}});
            const double v = draw.at(0, 1).real();
            const double d = v - mean;
            mean += d / (k + 1);
            m2 += d * (v - mean);
        }
        const double sem = std::sqrt(m2 / (samples - 1) / samples);
        const double dev = std::abs(mean - analytic.at(0, 1).real());
        pass = pass && dev < 3.0 * sem;
        detail += fmt("sigma2=%.3f dev/sem %.2f; ", sigma2, dev / sem);
    }
    report(7, "angle-noise channel vs Monte Carlo (3 SE)", pass, detail);
}

// 8. allocation optimality against brute force
void criterion_allocation() {
    Rng rng(515151);
    bool pass = true;
    long worst = 0;
    for (int rep = 0; rep < 20; ++rep) {
        const double l1 = 1.0 + rng.uniform();
        const double l2 = l1 + 0.3 + 2.5 * rng.uniform();
        const double c = 0.05 + 2.0 * rng.uniform();
        const long n_max = 100;
        const auto [n1, n2] = optimal_allocation(l1, l2, c, n_max);
        long best_n1 = 1;
        double best = mse_b(l1, l2, 1, n_max - 1, c, 1.0);
        for (long k = 2; k < n_max; ++k) {
            const double v = mse_b(l1, l2, k, n_max - k, c, 1.0);
            if (v < best) {
                best = v;
                best_n1 = k;
            }
        }
        worst = std::max(worst, std::abs(n1 - best_n1));
        pass = pass && std::abs(n1 - best_n1) <= 1 && (n1 + n2) == n_max;
    }
    report(8, "optimal allocation within +-1 of brute force", pass, fmt("max deviation %ld", worst));
}

// 9. adaptive tendency at equal budgets
void criterion_adaptive_tendency() {
    AdaptiveCompareConfig cfg;  // 200 trials, 5-qubit depth-10, 5% depolarizing
    const AdaptiveCompareResult r = run_adaptive_compare(cfg);
    const int needed = (static_cast<int>(r.levels.size()) + 1) / 2;
    std::string detail;
    for (const auto& level : r.levels)
        detail += fmt("%ld: %.4f/%.4f; ", level.budget, level.median_adaptive,
                      level.median_nonadaptive);
    report(9, "adaptive no worse at >= 50% of budgets",
           r.levels_adaptive_no_worse >= needed,
           fmt("%d of %zu levels (need %d): %s", r.levels_adaptive_no_worse, r.levels.size(),
               needed, detail.c_str()));
}

// 10. structural invariants
void criterion_structural() {
    bool pass = true;
    std::string what;

    // fold count law and unitary equivalence
    for (std::uint64_t seed = 0; seed < 4 && pass; ++seed) {
        const int depth = 4 + static_cast<int>(seed);
        const Circuit c = test::random_circuit(3, depth, 7000 + seed);
        const auto u = unitary_of(c);
        for (double lambda : {1.0, 1.4, 2.0, 3.0}) {
            const FoldSpec spec = resolve_fold(depth, lambda);
            const Circuit fg = fold_global(c, lambda);
            const Circuit fl = fold_gates(c, lambda, FoldMethod::from_left());
            const Circuit fr = fold_gates(c, lambda, FoldMethod::at_random(seed));
            if (fg.depth() != spec.folded_depth(depth) || fl.depth() != spec.folded_depth(depth) ||
                fr.depth() != spec.folded_depth(depth)) {
                pass = false;
                what = "count law";
                break;
            }
            for (const Circuit* f : {&fg, &fl, &fr})
                if (test::max_abs_diff(unitary_of(*f), u) > 1e-10) {
                    pass = false;
                    what = "unitary equivalence";
                }
        }
    }

    // estimator nesting identities
    Rng rng(606060);
    for (int rep = 0; rep < 25 && pass; ++rep) {
        NoiseCurve c;
        const int m = 3 + static_cast<int>(rng.uniform_int(3));
        for (int j = 0; j < m; ++j) c.add(1.0 + 0.5 * j, 0.2 + rng.uniform());
        if (std::abs(extrapolate_linear(c).value - fit_polynomial(c, 1).value) > 1e-10) {
            pass = false;
            what = "linear != poly(1)";
        }
        if (std::abs(extrapolate_richardson(c).value - fit_polynomial(c, m - 1).value) > 1e-9) {
            pass = false;
            what = "richardson != poly(m-1)";
        }
        if (std::abs(extrapolate_exp(c, 0.1).value - extrapolate_polyexp(c, 1, 0.1).value) > 1e-12) {
            pass = false;
            what = "exp != polyexp(1)";
        }
    }

    // CPTP checks on random channel compositions
    for (std::uint64_t seed = 0; seed < 4 && pass; ++seed) {
        DensityMatrix rho = test::random_density_matrix(3, seed);
        apply_depolarizing(rho, 0.9);
        apply_local_depolarizing(rho, 0.04, static_cast<int>(seed % 3));
        apply_amplitude_damping(rho, 0.15, static_cast<int>((seed + 1) % 3));
        apply_angle_noise_channel(rho, gate_matrix(GateKind::X, {}), 0.01, {static_cast<int>(seed % 3)});
        if (std::abs(rho.trace_real() - 1.0) > 1e-10 || rho.hermiticity_error() > 1e-10) {
            pass = false;
            what = "CPTP";
        }
    }

    report(10, "structural invariants", pass, pass ? "fold laws, nesting, CPTP all hold" : what);
}

}  // namespace

int main() {
    criterion_table2();
    criterion_rb_decay();
    criterion_random6();
    criterion_depolarizing_exactness();
    criterion_alpha();
    criterion_richardson_variance();
    criterion_angle_noise();
    criterion_allocation();
    criterion_adaptive_tendency();
    criterion_structural();

    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", g_failures);
    return 1;
}
