#include "zne/bench/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "zne/errors.hpp"

namespace zne::bench {

using nlohmann::json;

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open output file " + path);
    out << contents;
}

std::string table2_json(const Table2Config& cfg, const Table2Result& r) {
    json j;
    j["config"] = {{"circuits", cfg.circuits},     {"target_depth", cfg.target_depth},
                   {"dep_p", cfg.dep_p},           {"amp_gamma", cfg.amp_gamma},
                   {"lambdas", cfg.lambdas},       {"scalings", cfg.scalings},
                   {"exp_asymptote", cfg.exp_asymptote},
                   {"adaptive_iterations", cfg.adaptive_iterations},
                   {"seed", cfg.seed}};
    j["summary"] = json::array();
    for (const Table2Summary& s : r.summary)
        j["summary"].push_back({{"scaling", s.scaling},
                                {"extrapolation", s.extrapolation},
                                {"dep_mean", s.dep_mean},
                                {"dep_std", s.dep_std},
                                {"amp_mean", s.amp_mean},
                                {"amp_std", s.amp_std}});
    j["records"] = json::array();
    for (const Table2Record& rec : r.records)
        j["records"].push_back({{"circuit", rec.circuit},
                                {"depth", rec.depth},
                                {"gates", rec.gates},
                                {"noise", rec.noise},
                                {"scaling", rec.scaling},
                                {"extrapolation", rec.extrapolation},
                                {"error_percent", rec.error_percent}});
    return j.dump(2);
}

std::string table2_csv(const Table2Result& r) {
    std::string out = "scaling,extrapolation,dep_mean,dep_std,amp_mean,amp_std\n";
    char buf[256];
    for (const Table2Summary& s : r.summary) {
        std::snprintf(buf, sizeof buf, "%s,%s,%.4f,%.4f,%.4f,%.4f\n", s.scaling.c_str(),
                      s.extrapolation.c_str(), s.dep_mean, s.dep_std, s.amp_mean, s.amp_std);
        out += buf;
    }
    return out;
}

std::string rb_decay_json(const RbDecayConfig& cfg, const RbDecayResult& r) {
    json j;
    j["config"] = {{"clifford_counts", cfg.clifford_counts},
                   {"circuits_per_length", cfg.circuits_per_length},
                   {"dep_p", cfg.dep_p},
                   {"lambdas", cfg.lambdas},
                   {"degree", cfg.degree},
                   {"seed", cfg.seed}};
    j["decay_unmitigated"] = r.decay_unmitigated;
    j["decay_mitigated"] = r.decay_mitigated;
    j["points"] = json::array();
    for (const auto& p : r.points)
        j["points"].push_back({{"depth", p.depth},
                               {"survival_unmitigated", p.survival_unmitigated},
                               {"survival_mitigated", p.survival_mitigated}});
    return j.dump(2);
}

std::string rb_decay_csv(const RbDecayResult& r) {
    std::string out = "depth,survival_unmitigated,survival_mitigated\n";
    char buf[128];
    for (const auto& p : r.points) {
        std::snprintf(buf, sizeof buf, "%d,%.8f,%.8f\n", p.depth, p.survival_unmitigated,
                      p.survival_mitigated);
        out += buf;
    }
    return out;
}

std::string random6_json(const Random6Config& cfg, const Random6Result& r) {
    json j;
    j["config"] = {{"circuits", cfg.circuits}, {"dep_p", cfg.dep_p},   {"lambdas", cfg.lambdas},
                   {"degree", cfg.degree},     {"scaling", cfg.scaling}, {"seed", cfg.seed}};
    j["mean_unmitigated"] = r.mean_unmitigated;
    j["std_unmitigated"] = r.std_unmitigated;
    j["mean_mitigated"] = r.mean_mitigated;
    j["std_mitigated"] = r.std_mitigated;
    j["mean_improvement"] = r.mean_improvement;
    // improvement-ratio histogram, unit bins up to 8x
    std::vector<int> bins(9, 0);
    for (const auto& rec : r.records) {
        const int b = rec.improvement < 0.0 ? 0 : std::min(8, static_cast<int>(rec.improvement));
        bins[static_cast<std::size_t>(b)] += 1;
    }
    j["improvement_histogram"] = bins;
    j["records"] = json::array();
    for (const auto& rec : r.records)
        j["records"].push_back({{"circuit", rec.circuit},
                                {"l2_unmitigated", rec.l2_unmitigated},
                                {"l2_mitigated", rec.l2_mitigated},
                                {"improvement", rec.improvement}});
    return j.dump(2);
}

std::string random6_csv(const Random6Result& r) {
    std::string out = "circuit,l2_unmitigated,l2_mitigated,improvement\n";
    char buf[128];
    for (const auto& rec : r.records) {
        std::snprintf(buf, sizeof buf, "%d,%.8f,%.8f,%.4f\n", rec.circuit, rec.l2_unmitigated,
                      rec.l2_mitigated, rec.improvement);
        out += buf;
    }
    return out;
}

std::string param_noise_json(const ParamNoiseConfig& cfg, const ParamNoiseResult& r) {
    json j;
    j["config"] = {{"circuits", cfg.circuits}, {"qubits", cfg.qubits},     {"depth", cfg.depth},
                   {"sigma2", cfg.sigma2},     {"lambdas", cfg.lambdas},   {"ensemble", cfg.ensemble},
                   {"seed", cfg.seed}};
    j["median_unmitigated"] = r.median_unmitigated;
    j["median_parameter"] = r.median_parameter;
    j["median_folding"] = r.median_folding;
    auto box = [](const BoxStats& b) {
        return json{{"min", b.min}, {"q1", b.q1}, {"median", b.median}, {"q3", b.q3}, {"max", b.max}};
    };
    j["box_unmitigated"] = box(r.box_unmitigated);
    j["box_parameter"] = box(r.box_parameter);
    j["box_folding"] = box(r.box_folding);
    j["records"] = json::array();
    for (const auto& rec : r.records)
        j["records"].push_back({{"circuit", rec.circuit},
                                {"err_unmitigated", rec.err_unmitigated},
                                {"err_parameter", rec.err_parameter},
                                {"err_folding", rec.err_folding}});
    return j.dump(2);
}

std::string param_noise_csv(const ParamNoiseResult& r) {
    std::string out = "circuit,err_unmitigated,err_parameter,err_folding\n";
    char buf[160];
    for (const auto& rec : r.records) {
        std::snprintf(buf, sizeof buf, "%d,%.8g,%.8g,%.8g\n", rec.circuit, rec.err_unmitigated,
                      rec.err_parameter, rec.err_folding);
        out += buf;
    }
    return out;
}

std::string adaptive_compare_json(const AdaptiveCompareConfig& cfg, const AdaptiveCompareResult& r) {
    json j;
    j["config"] = {{"qubits", cfg.qubits},
                   {"depth", cfg.depth},
                   {"dep_keep", cfg.dep_keep},
                   {"sigma0", cfg.sigma0},
                   {"budgets", cfg.budgets},
                   {"trials", cfg.trials},
                   {"nonadaptive_lambdas", cfg.nonadaptive_lambdas},
                   {"batches_per_budget", cfg.batches_per_budget},
                   {"seed", cfg.seed}};
    j["levels_adaptive_no_worse"] = r.levels_adaptive_no_worse;
    j["levels"] = json::array();
    for (const auto& level : r.levels)
        j["levels"].push_back({{"budget", level.budget},
                               {"median_adaptive", level.median_adaptive},
                               {"median_nonadaptive", level.median_nonadaptive},
                               {"errors_adaptive", level.errors_adaptive},
                               {"errors_nonadaptive", level.errors_nonadaptive}});
    return j.dump(2);
}

std::string adaptive_compare_csv(const AdaptiveCompareResult& r) {
    std::string out = "budget,median_adaptive,median_nonadaptive\n";
    char buf[128];
    for (const auto& level : r.levels) {
        std::snprintf(buf, sizeof buf, "%ld,%.8g,%.8g\n", level.budget, level.median_adaptive,
                      level.median_nonadaptive);
        out += buf;
    }
    return out;
}

}  // namespace zne::bench
