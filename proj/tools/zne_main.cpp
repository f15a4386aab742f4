#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zne/bench/report.hpp"
#include "zne/errors.hpp"
#include "zne/fold.hpp"

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw zne::ConfigError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    json j = json::parse(read_file(path), nullptr, false);
    if (j.is_discarded()) throw zne::ConfigError("config " + path + " is not valid JSON");
    if (!j.is_object()) throw zne::ConfigError("config must be a JSON object");
    return j;
}

template <typename T>
void maybe(const json& j, const char* key, T& slot) {
    if (j.contains(key)) slot = j.at(key).get<T>();
}

int cmd_fold(const std::string& in_path, double lambda, const std::string& method,
             std::uint64_t seed, const std::string& out_path, bool per_gate) {
    zne::Circuit c = zne::parse_circuit(read_file(in_path));
    if (per_gate) c = zne::as_gate_layers(c);

    zne::Circuit folded;
    if (method == "global") {
        folded = zne::fold_global(c, lambda);
    } else if (method == "left") {
        folded = zne::fold_gates(c, lambda, zne::FoldMethod::from_left());
    } else if (method == "right") {
        folded = zne::fold_gates(c, lambda, zne::FoldMethod::from_right());
    } else if (method == "random") {
        folded = zne::fold_gates(c, lambda, zne::FoldMethod::at_random(seed));
    } else {
        throw zne::ConfigError("unknown fold method '" + method + "'");
    }

    const zne::FoldSpec spec = zne::resolve_fold(c.depth(), lambda);
    std::cerr << "fold: depth " << c.depth() << " -> " << folded.depth() << ", realized lambda "
              << spec.realized_lambda << " (n=" << spec.n << ", s=" << spec.s << ")\n";
    const std::string text = zne::serialize_circuit(folded);
    if (out_path.empty())
        std::cout << text;
    else
        zne::bench::write_file(out_path, text);
    return 0;
}

int cmd_extrapolate(const std::string& curve_path, const std::string& method,
                    std::optional<double> asymptote) {
    const zne::NoiseCurve curve = zne::NoiseCurve::from_csv(read_file(curve_path));

    zne::Estimate est;
    if (method == "linear") {
        est = zne::extrapolate_linear(curve);
    } else if (method == "richardson") {
        est = zne::extrapolate_richardson(curve);
    } else if (method.rfind("poly:", 0) == 0) {
        est = zne::fit_polynomial(curve, std::stoi(method.substr(5)));
    } else if (method == "exp") {
        est = zne::extrapolate_exp(curve, asymptote);
    } else if (method.rfind("polyexp:", 0) == 0) {
        est = zne::extrapolate_polyexp(curve, std::stoi(method.substr(8)), asymptote);
    } else {
        throw zne::ConfigError("unknown extrapolation method '" + method + "'");
    }

    json j;
    j["value"] = est.value;
    j["model"] = est.model;
    j["params"] = est.params;
    if (est.variance) j["variance"] = *est.variance;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_bench(const std::string& scenario, const std::string& config_path,
              std::optional<std::uint64_t> seed, const std::string& out_dir) {
    using namespace zne::bench;
    const json cfg = load_config(config_path);
    std::filesystem::create_directories(out_dir);
    auto emit = [&](const std::string& name, const std::string& j, const std::string& csv) {
        write_file(out_dir + "/" + name + ".json", j);
        write_file(out_dir + "/" + name + ".csv", csv);
        std::cerr << "wrote " << out_dir << "/" << name << ".{json,csv}\n";
    };

    if (scenario == "rb" || scenario == "table2") {
        Table2Config c;
        maybe(cfg, "circuits", c.circuits);
        maybe(cfg, "target_depth", c.target_depth);
        maybe(cfg, "dep_p", c.dep_p);
        maybe(cfg, "amp_gamma", c.amp_gamma);
        maybe(cfg, "lambdas", c.lambdas);
        maybe(cfg, "scalings", c.scalings);
        maybe(cfg, "exp_asymptote", c.exp_asymptote);
        maybe(cfg, "adaptive_iterations", c.adaptive_iterations);
        maybe(cfg, "seed", c.seed);
        if (seed) c.seed = *seed;
        const Table2Result r = run_table2(c);
        for (const Table2Summary& s : r.summary)
            std::printf("%-8s %-12s dep %6.2f +- %5.2f | amp %6.2f +- %5.2f\n", s.scaling.c_str(),
                        s.extrapolation.c_str(), s.dep_mean, s.dep_std, s.amp_mean, s.amp_std);
        emit("table2", table2_json(c, r), table2_csv(r));
        return 0;
    }
    if (scenario == "rb_decay") {
        RbDecayConfig c;
        maybe(cfg, "clifford_counts", c.clifford_counts);
        maybe(cfg, "circuits_per_length", c.circuits_per_length);
        maybe(cfg, "dep_p", c.dep_p);
        maybe(cfg, "lambdas", c.lambdas);
        maybe(cfg, "degree", c.degree);
        maybe(cfg, "seed", c.seed);
        if (seed) c.seed = *seed;
        const RbDecayResult r = run_rb_decay(c);
        std::printf("decay per layer: unmitigated %.4f, mitigated %.4f\n", r.decay_unmitigated,
                    r.decay_mitigated);
        emit("rb_decay", rb_decay_json(c, r), rb_decay_csv(r));
        return 0;
    }
    if (scenario == "random6") {
        Random6Config c;
        maybe(cfg, "circuits", c.circuits);
        maybe(cfg, "dep_p", c.dep_p);
        maybe(cfg, "lambdas", c.lambdas);
        maybe(cfg, "degree", c.degree);
        maybe(cfg, "scaling", c.scaling);
        maybe(cfg, "seed", c.seed);
        if (seed) c.seed = *seed;
        const Random6Result r = run_random6_study(c);
        std::printf("L2 error: unmitigated %.4f +- %.4f, mitigated %.4f +- %.4f, improvement %.2fx\n",
                    r.mean_unmitigated, r.std_unmitigated, r.mean_mitigated, r.std_mitigated,
                    r.mean_improvement);
        emit("random6", random6_json(c, r), random6_csv(r));
        return 0;
    }
    if (scenario == "param_noise") {
        ParamNoiseConfig c;
        maybe(cfg, "circuits", c.circuits);
        maybe(cfg, "qubits", c.qubits);
        maybe(cfg, "depth", c.depth);
        maybe(cfg, "sigma2", c.sigma2);
        maybe(cfg, "lambdas", c.lambdas);
        maybe(cfg, "ensemble", c.ensemble);
        maybe(cfg, "seed", c.seed);
        if (seed) c.seed = *seed;
        const ParamNoiseResult r = run_param_noise_study(c);
        std::printf("median |error|: unmitigated %.5f, parameter ZNE %.5f, folding ZNE %.5f\n",
                    r.median_unmitigated, r.median_parameter, r.median_folding);
        emit("param_noise", param_noise_json(c, r), param_noise_csv(r));
        return 0;
    }
    if (scenario == "adaptive_compare") {
        AdaptiveCompareConfig c;
        maybe(cfg, "qubits", c.qubits);
        maybe(cfg, "depth", c.depth);
        maybe(cfg, "dep_keep", c.dep_keep);
        maybe(cfg, "sigma0", c.sigma0);
        maybe(cfg, "budgets", c.budgets);
        maybe(cfg, "trials", c.trials);
        maybe(cfg, "nonadaptive_lambdas", c.nonadaptive_lambdas);
        maybe(cfg, "batches_per_budget", c.batches_per_budget);
        maybe(cfg, "seed", c.seed);
        if (seed) c.seed = *seed;
        const AdaptiveCompareResult r = run_adaptive_compare(c);
        for (const auto& level : r.levels)
            std::printf("budget %6ld: median |error| adaptive %.5f, non-adaptive %.5f\n", level.budget,
                        level.median_adaptive, level.median_nonadaptive);
        emit("adaptive_compare", adaptive_compare_json(c, r), adaptive_compare_csv(r));
        return 0;
    }
    throw zne::ConfigError("unknown scenario '" + scenario +
                           "' (rb|rb_decay|random6|param_noise|adaptive_compare)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"digital zero-noise extrapolation toolkit"};
    app.require_subcommand(1);

    auto* bench = app.add_subcommand("bench", "run a benchmark scenario");
    std::string scenario, config_path, out_dir = "out";
    std::optional<std::uint64_t> seed;
    bench->add_option("scenario", scenario, "rb|rb_decay|random6|param_noise|adaptive_compare")
        ->required();
    bench->add_option("--config", config_path, "JSON config file");
    bench->add_option("--seed", seed, "master seed override");
    bench->add_option("--out", out_dir, "output directory");

    auto* fold = app.add_subcommand("fold", "noise-scale a circuit by unitary folding");
    std::string in_path, method = "global", fold_out;
    double lambda = 1.0;
    std::uint64_t fold_seed = 0;
    bool per_gate = false;
    fold->add_option("--in", in_path, "circuit text file")->required();
    fold->add_option("--lambda", lambda, "noise scale factor (>= 1)")->required();
    fold->add_option("--method", method, "global|left|right|random");
    fold->add_option("--seed", fold_seed, "seed for method=random");
    fold->add_option("--out", fold_out, "output file (stdout when absent)");
    fold->add_flag("--per-gate", per_gate, "treat each gate as its own layer before folding");

    auto* extrap = app.add_subcommand("extrapolate", "zero-noise extrapolate a measured curve");
    std::string curve_path, ex_method = "linear";
    std::optional<double> asymptote;
    extrap->add_option("--curve", curve_path, "CSV with columns lambda,y,shots,sigma")->required();
    extrap->add_option("--method", ex_method, "linear|poly:<d>|richardson|exp|polyexp:<d>");
    extrap->add_option("--asymptote", asymptote, "known asymptote a for exp/polyexp");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad flags are configuration errors
    }

    try {
        if (bench->parsed()) return cmd_bench(scenario, config_path, seed, out_dir);
        if (fold->parsed()) return cmd_fold(in_path, lambda, method, fold_seed, fold_out, per_gate);
        if (extrap->parsed()) return cmd_extrapolate(curve_path, ex_method, asymptote);
    } catch (const zne::EstimationError& e) {
        std::cerr << "estimation failure: " << e.what() << "\n";
        return 3;
    } catch (const zne::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const zne::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const zne::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
