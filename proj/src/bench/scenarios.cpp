#include "zne/bench/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>

#include "zne/bench/generators.hpp"
#include "zne/errors.hpp"
#include "zne/kernels.hpp"
#include "zne/rng.hpp"

namespace zne::bench {

double median_of(std::vector<double> values) {
    if (values.empty()) throw Error("median_of: empty");
    std::sort(values.begin(), values.end());
    const std::size_t m = values.size();
    return m % 2 ? values[m / 2] : 0.5 * (values[m / 2 - 1] + values[m / 2]);
}

BoxStats box_stats(std::vector<double> values) {
    if (values.empty()) throw Error("box_stats: empty");
    std::sort(values.begin(), values.end());
    auto quantile = [&](double q) {
        const double pos = q * static_cast<double>(values.size() - 1);
        const std::size_t lo = static_cast<std::size_t>(pos);
        const double frac = pos - static_cast<double>(lo);
        return lo + 1 < values.size() ? values[lo] * (1.0 - frac) + values[lo + 1] * frac
                                      : values[lo];
    };
    return {values.front(), quantile(0.25), quantile(0.5), quantile(0.75), values.back()};
}

namespace {

std::pair<double, double> mean_std(const std::vector<double>& v) {
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double var = 0.0;
    for (double x : v) var += (x - mean) * (x - mean);
    if (v.size() > 1) var /= static_cast<double>(v.size() - 1);
    return {mean, std::sqrt(var)};
}

}  // namespace

// ---------------------------------------------------------------- table2

const Table2Summary* Table2Result::find(const std::string& scaling,
                                        const std::string& extrapolation) const {
    for (const Table2Summary& s : summary)
        if (s.scaling == scaling && s.extrapolation == extrapolation) return &s;
    return nullptr;
}

Table2Result run_table2(const Table2Config& config) {
    Table2Result result;
    const Observable obs = Observable::projector(0);

    struct CellKey {
        std::string scaling, extrapolation;
    };
    std::vector<CellKey> cells;
    cells.push_back({"none", "unmitigated"});
    const std::vector<std::string> extraps = {"linear", "quadratic", "richardson", "exponential",
                                              "adaptive_exp"};
    for (const std::string& s : config.scalings)
        for (const std::string& e : extraps) cells.push_back({s, e});

    // errors[cell][noise] accumulated per circuit
    std::vector<std::vector<double>> dep_errors(cells.size()), amp_errors(cells.size());

    for (int ci = 0; ci < config.circuits; ++ci) {
        const Circuit c = generate_rb_circuit(2, config.target_depth, derive_seed(config.seed, 11, ci));
        const double exact = simulate_expectation(c, NoiseModel::none(), obs);  // 1 by construction

        const NoiseModel noises[2] = {NoiseModel::local_depolarizing_per_layer(config.dep_p),
                                      NoiseModel::amplitude_damping(config.amp_gamma)};
        const char* noise_tags[2] = {"dep", "amp"};

        for (int ni = 0; ni < 2; ++ni) {
            auto record = [&](std::size_t cell, double error) {
                (ni == 0 ? dep_errors : amp_errors)[cell].push_back(100.0 * error);
                result.records.push_back({ci, c.depth(), c.gate_count(), noise_tags[ni],
                                          cells[cell].scaling, cells[cell].extrapolation,
                                          100.0 * error});
            };

            const double e1 = simulate_expectation(c, noises[ni], obs);
            record(0, std::abs(e1 - exact));

            std::size_t cell = 1;
            for (const std::string& scaling_name_ : config.scalings) {
                const ScalingMethod scaling = scaling_from_name(scaling_name_);
                ZneOptions base;
                base.scaling = scaling;
                base.lambdas = config.lambdas;
                base.seed = derive_seed(config.seed, 13, static_cast<std::uint64_t>(ci * 2 + ni));

                // one measured curve shared by the non-adaptive extrapolators
                Executor ex = make_executor(c, noises[ni], obs, scaling, base);
                NoiseCurve curve;
                for (double lambda : config.lambdas) curve.add(lambda, ex(lambda, 1));

                for (const std::string& extrap : extraps) {
                    double mitigated = 0.0;
                    if (extrap == "linear") {
                        mitigated = extrapolate_linear(curve).value;
                    } else if (extrap == "quadratic") {
                        mitigated = fit_polynomial(curve, 2).value;
                    } else if (extrap == "richardson") {
                        mitigated = extrapolate_richardson(curve).value;
                    } else if (extrap == "exponential") {
                        mitigated = extrapolate_exp(curve, config.exp_asymptote).value;
                    } else {  // adaptive_exp
                        ZneOptions opt = base;
                        opt.fit.method = "adaptive_exp";
                        opt.fit.asymptote = config.exp_asymptote;
                        opt.adaptive_iterations = config.adaptive_iterations;
                        mitigated = run_zne(c, noises[ni], obs, opt).estimate.value;
                    }
                    record(cell, std::abs(mitigated - exact));
                    ++cell;
                }
            }
        }
    }

    for (std::size_t cell = 0; cell < cells.size(); ++cell) {
        Table2Summary s;
        s.scaling = cells[cell].scaling;
        s.extrapolation = cells[cell].extrapolation;
        std::tie(s.dep_mean, s.dep_std) = mean_std(dep_errors[cell]);
        std::tie(s.amp_mean, s.amp_std) = mean_std(amp_errors[cell]);
        result.summary.push_back(s);
    }
    return result;
}

// ---------------------------------------------------------------- rb decay

namespace {

// least-squares fit of survival = B + A f^depth via the exponential
// extrapolator (the depth plays the role of the scale factor). B is pinned
// to the fully-mixed survival 1/4: the true asymptote of both the noisy and
// the per-point-extrapolated curves, and far more stable than fitting it.
double fit_decay(const std::vector<std::pair<int, double>>& points) {
    NoiseCurve curve;
    for (const auto& [depth, survival] : points) curve.add(static_cast<double>(depth), survival);
    const Estimate e = extrapolate_exp(curve, 0.25);
    return std::exp(-e.params[2]);  // f = exp(-c)
}

}  // namespace

RbDecayResult run_rb_decay(const RbDecayConfig& config) {
    RbDecayResult result;
    const Observable obs = Observable::projector(0);
    const NoiseModel noise = NoiseModel::local_depolarizing_per_layer(config.dep_p);

    std::vector<std::pair<int, double>> unmit, mit;
    for (int li = 0; li < static_cast<int>(config.clifford_counts.size()); ++li) {
        for (int ci = 0; ci < config.circuits_per_length; ++ci) {
            const Circuit c = generate_rb_sequence(config.clifford_counts[static_cast<std::size_t>(li)],
                                                   derive_seed(config.seed, li, ci));
            ZneOptions opt;
            opt.scaling = ScalingMethod::Circuit;
            opt.lambdas = config.lambdas;
            opt.fit.method = "poly";
            opt.fit.degree = config.degree;
            opt.seed = derive_seed(config.seed, 101, static_cast<std::uint64_t>(li * 1000 + ci));

            const ZneRun run = run_zne(c, noise, obs, opt);
            const double survival_u = run.curve.points.front().y;  // lambda = 1
            const double survival_m = run.estimate.value;
            unmit.push_back({c.depth(), survival_u});
            mit.push_back({c.depth(), survival_m});
            result.points.push_back({c.depth(), survival_u, survival_m});
        }
    }
    result.decay_unmitigated = fit_decay(unmit);
    result.decay_mitigated = fit_decay(mit);
    return result;
}

// ---------------------------------------------------------------- random6

Random6Result run_random6_study(const Random6Config& config) {
    Random6Result result;
    const NoiseModel noise = NoiseModel::local_depolarizing_per_layer(config.dep_p);
    const ScalingMethod scaling = scaling_from_name(config.scaling);

    std::vector<double> l2u, l2m, ratio;
    for (int ci = 0; ci < config.circuits; ++ci) {
        const Circuit c = generate_random6(derive_seed(config.seed, 21, ci));
        const std::vector<double> ideal = simulate_probabilities(c, NoiseModel::none());

        // probability vector at each scale factor
        std::vector<std::vector<double>> dist;
        for (double lambda : config.lambdas) {
            Circuit folded;
            switch (scaling) {
                case ScalingMethod::Circuit: folded = fold_global(c, lambda); break;
                case ScalingMethod::FromLeft: folded = fold_gates(c, lambda, FoldMethod::from_left()); break;
                case ScalingMethod::FromRight: folded = fold_gates(c, lambda, FoldMethod::from_right()); break;
                case ScalingMethod::AtRandom:
                    folded = fold_gates(c, lambda, FoldMethod::at_random(derive_seed(config.seed, 22, ci)));
                    break;
                default: throw ConfigError("random6: scaling must be a folding method");
            }
            dist.push_back(simulate_probabilities(folded, noise));
        }

        // per-bitstring polynomial extrapolation of the outcome distribution
        std::vector<double> mitigated(ideal.size());
        for (std::size_t b = 0; b < ideal.size(); ++b) {
            NoiseCurve curve;
            for (std::size_t j = 0; j < config.lambdas.size(); ++j)
                curve.add(config.lambdas[j], dist[j][b]);
            mitigated[b] = fit_polynomial(curve, config.degree).value;
        }

        const auto& K = kernels::active_ops();
        const double du = K.l2_distance(dist[0].data(), ideal.data(), ideal.size());
        const double dm = K.l2_distance(mitigated.data(), ideal.data(), ideal.size());
        l2u.push_back(du);
        l2m.push_back(dm);
        ratio.push_back(du / dm);
        result.records.push_back({ci, du, dm, du / dm});
    }

    std::tie(result.mean_unmitigated, result.std_unmitigated) = mean_std(l2u);
    std::tie(result.mean_mitigated, result.std_mitigated) = mean_std(l2m);
    result.mean_improvement = 0.0;
    for (double r : ratio) result.mean_improvement += r;
    result.mean_improvement /= static_cast<double>(ratio.size());
    return result;
}

// ---------------------------------------------------------------- parameter noise

ParamNoiseResult run_param_noise_study(const ParamNoiseConfig& config) {
    ParamNoiseResult result;
    const NoiseModel noise = NoiseModel::angle_noise(config.sigma2);

    std::vector<double> eu, ep, ef;
    for (int ci = 0; ci < config.circuits; ++ci) {
        const Circuit c =
            generate_random_parametric(config.qubits, config.depth, derive_seed(config.seed, 31, ci));
        Rng obs_rng(derive_seed(config.seed, 32, ci));
        const Observable obs =
            Observable::projector(obs_rng.uniform_int(std::uint64_t{1} << config.qubits));

        const double exact = simulate_expectation(c, NoiseModel::none(), obs);
        const double noisy = simulate_expectation(c, noise, obs);

        ZneOptions param_opt;
        param_opt.scaling = ScalingMethod::Parameter;
        param_opt.lambdas = config.lambdas;
        param_opt.fit.method = "linear";
        param_opt.param_sigma2 = config.sigma2;
        param_opt.param_ensemble = config.ensemble;
        param_opt.seed = derive_seed(config.seed, 33, ci);
        const double e_param = run_zne(c, noise, obs, param_opt).estimate.value;

        ZneOptions fold_opt;
        fold_opt.scaling = ScalingMethod::FromLeft;
        fold_opt.lambdas = config.lambdas;
        fold_opt.fit.method = "linear";
        fold_opt.seed = derive_seed(config.seed, 34, ci);
        const double e_fold = run_zne(c, noise, obs, fold_opt).estimate.value;

        eu.push_back(std::abs(noisy - exact));
        ep.push_back(std::abs(e_param - exact));
        ef.push_back(std::abs(e_fold - exact));
        result.records.push_back({ci, eu.back(), ep.back(), ef.back()});
    }
    result.median_unmitigated = median_of(eu);
    result.median_parameter = median_of(ep);
    result.median_folding = median_of(ef);
    result.box_unmitigated = box_stats(eu);
    result.box_parameter = box_stats(ep);
    result.box_folding = box_stats(ef);
    return result;
}

// ---------------------------------------------------------------- adaptive comparison

AdaptiveCompareResult run_adaptive_compare(const AdaptiveCompareConfig& config) {
    AdaptiveCompareResult result;
    const Observable obs = Observable::projector(0);
    const NoiseModel noise = NoiseModel::global_depolarizing_per_layer(config.dep_keep);
    const double asymptote = 1.0 / static_cast<double>(std::uint64_t{1} << config.qubits);

    for (long budget : config.budgets) {
        AdaptiveCompareResult::Level level;
        level.budget = budget;

        for (int trial = 0; trial < config.trials; ++trial) {
            const Circuit c = generate_mirror_circuit(config.qubits, config.depth,
                                                      derive_seed(config.seed, 41, trial));
            const double truth = 1.0;  // mirror circuit survival

            // shared executor settings; adaptive and non-adaptive get
            // independent noise streams
            auto make_gaussian_executor = [&](std::uint64_t tag) {
                auto rng = std::make_shared<Rng>(derive_seed(config.seed, tag,
                                                             static_cast<std::uint64_t>(trial) * 131 +
                                                                 static_cast<std::uint64_t>(budget)));
                auto memo = std::make_shared<std::map<double, double>>();
                return Executor([&c, &obs, noise, rng, memo, sigma0 = config.sigma0](double lambda,
                                                                                     long shots) {
                    auto it = memo->find(lambda);
                    double exact;
                    if (it != memo->end()) {
                        exact = it->second;
                    } else {
                        exact = simulate_expectation(c, noise.scaled_by(lambda), obs);
                        memo->emplace(lambda, exact);
                    }
                    return rng->gaussian(exact, sigma0 / std::sqrt(static_cast<double>(shots)));
                });
            };

            // non-adaptive: equal split over the fixed scale factors
            {
                Executor ex = make_gaussian_executor(0xaaa1);
                const long per = std::max<long>(1, budget / static_cast<long>(config.nonadaptive_lambdas.size()));
                NoiseCurve curve;
                for (double lambda : config.nonadaptive_lambdas)
                    curve.add(lambda, ex(lambda, per), per, config.sigma0 / std::sqrt(static_cast<double>(per)));
                double err;
                try {
                    err = std::abs(extrapolate_exp(curve, asymptote).value - truth);
                } catch (const EstimationError&) {
                    err = std::abs(curve.points.front().y - truth);  // degenerate fallback
                }
                level.errors_nonadaptive.push_back(err);
            }

            // adaptive exponential
            {
                Executor ex = make_gaussian_executor(0xbbb2);
                AdaptiveConfig cfg;
                cfg.a = asymptote;
                cfg.n_max = budget;
                cfg.n_batch = std::max<long>(2, budget / config.batches_per_budget);
                cfg.sigma0_sq = config.sigma0 * config.sigma0;
                double err;
                try {
                    err = std::abs(adaptive_exp_extrapolate(ex, cfg).estimate.value - truth);
                } catch (const EstimationError&) {
                    err = 1.0;
                }
                level.errors_adaptive.push_back(err);
            }
        }

        level.median_adaptive = median_of(level.errors_adaptive);
        level.median_nonadaptive = median_of(level.errors_nonadaptive);
        if (level.median_adaptive <= level.median_nonadaptive) ++result.levels_adaptive_no_worse;
        result.levels.push_back(std::move(level));
    }
    return result;
}

}  // namespace zne::bench
