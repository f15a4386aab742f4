#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zne/bench/zne_runner.hpp"

namespace zne::bench {

// ---------------------------------------------------------------- table2

struct Table2Config {
    int circuits = 20;
    int target_depth = 27;
    double dep_p = 0.01;     // local per-qubit depolarizing strength
    double amp_gamma = 0.01;
    std::vector<double> lambdas = {1.0, 1.5, 2.0, 2.5};
    std::vector<std::string> scalings = {"circuit", "random", "left"};
    double exp_asymptote = 0.25;
    int adaptive_iterations = 3;  // up to 4 distinct scale factors
    std::uint64_t seed = 2020;
};

struct Table2Record {
    int circuit = 0;
    int depth = 0;
    int gates = 0;
    std::string noise;          // "dep" | "amp"
    std::string scaling;        // "none" for the unmitigated row
    std::string extrapolation;  // "unmitigated" | "linear" | ...
    double error_percent = 0.0;
};

struct Table2Summary {
    std::string scaling, extrapolation;
    double dep_mean = 0, dep_std = 0, amp_mean = 0, amp_std = 0;
};

struct Table2Result {
    std::vector<Table2Record> records;
    std::vector<Table2Summary> summary;  // first row is the unmitigated one

    const Table2Summary* find(const std::string& scaling, const std::string& extrapolation) const;
};

Table2Result run_table2(const Table2Config& config);

// ---------------------------------------------------------------- rb decay

struct RbDecayConfig {
    std::vector<int> clifford_counts = {2, 4, 6, 8, 11, 14, 17, 20, 24, 28};
    int circuits_per_length = 8;
    double dep_p = 0.01;
    std::vector<double> lambdas = {1.0, 1.5, 2.0};
    int degree = 2;
    std::uint64_t seed = 77;
};

struct RbDecayResult {
    // per-circuit: depth and the two survival probabilities
    struct Point {
        int depth;
        double survival_unmitigated;
        double survival_mitigated;
    };
    std::vector<Point> points;
    double decay_unmitigated = 0.0;  // f of A f^depth + B
    double decay_mitigated = 0.0;
};

RbDecayResult run_rb_decay(const RbDecayConfig& config);

// ---------------------------------------------------------------- random6

struct Random6Config {
    int circuits = 50;
    double dep_p = 0.01;
    std::vector<double> lambdas = {1.0, 1.5, 2.0};
    int degree = 2;
    std::string scaling = "left";
    std::uint64_t seed = 606;
};

struct Random6Result {
    struct Record {
        int circuit;
        double l2_unmitigated;
        double l2_mitigated;
        double improvement;  // unmitigated / mitigated
    };
    std::vector<Record> records;
    double mean_unmitigated = 0, std_unmitigated = 0;
    double mean_mitigated = 0, std_mitigated = 0;
    double mean_improvement = 0;
};

Random6Result run_random6_study(const Random6Config& config);

// ---------------------------------------------------------------- parameter noise

struct ParamNoiseConfig {
    int circuits = 50;
    int qubits = 6;
    int depth = 25;
    double sigma2 = 0.001;
    std::vector<double> lambdas = {1.0, 2.0, 3.0};
    int ensemble = 200;  // perturbed simulations averaged per lambda
    std::uint64_t seed = 505;
};

// five-number summary for box plots
struct BoxStats {
    double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
};
BoxStats box_stats(std::vector<double> values);

struct ParamNoiseResult {
    struct Record {
        int circuit;
        double err_unmitigated;
        double err_parameter;  // parameter-noise-scaled ZNE
        double err_folding;    // fold-from-left ZNE
    };
    std::vector<Record> records;
    double median_unmitigated = 0, median_parameter = 0, median_folding = 0;
    BoxStats box_unmitigated, box_parameter, box_folding;
};

ParamNoiseResult run_param_noise_study(const ParamNoiseConfig& config);

// ---------------------------------------------------------------- adaptive comparison

struct AdaptiveCompareConfig {
    int qubits = 5;
    int depth = 10;
    double dep_keep = 0.95;  // global per-layer keep probability (5% depolarizing)
    double sigma0 = 0.1;     // single-shot standard deviation of the executor
    std::vector<long> budgets = {400, 800, 1600, 3200, 6400};
    int trials = 200;
    std::vector<double> nonadaptive_lambdas = {1.0, 2.0, 3.0};
    int batches_per_budget = 4;  // adaptive n_batch = budget / batches
    std::uint64_t seed = 808;
};

struct AdaptiveCompareResult {
    struct Level {
        long budget;
        double median_adaptive;
        double median_nonadaptive;
        std::vector<double> errors_adaptive;
        std::vector<double> errors_nonadaptive;
    };
    std::vector<Level> levels;
    int levels_adaptive_no_worse = 0;
};

AdaptiveCompareResult run_adaptive_compare(const AdaptiveCompareConfig& config);

// median of a copy; NaN-free input expected
double median_of(std::vector<double> values);

}  // namespace zne::bench
