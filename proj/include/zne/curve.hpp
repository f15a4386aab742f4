#pragma once

#include <optional>
#include <string>
#include <vector>

namespace zne {

// One measured expectation value at a noise scale factor. `shots` is 0 when
// the value is exact (density-matrix mode); `sigma` is the per-point shot
// standard deviation when known.
struct CurvePoint {
    double lambda = 1.0;
    double y = 0.0;
    long shots = 0;
    std::optional<double> sigma;
};

struct NoiseCurve {
    std::vector<CurvePoint> points;

    std::size_t size() const { return points.size(); }
    void add(double lambda, double y, long shots = 0, std::optional<double> sigma = std::nullopt) {
        points.push_back({lambda, y, shots, sigma});
    }

    bool all_sigmas_present() const;
    int distinct_lambdas() const;

    // duplicate lambdas collapsed to their shot-weighted mean (weight 1 when
    // shots are absent); sigmas combine as independent estimates
    NoiseCurve merged() const;

    // CSV with header "lambda,y,shots,sigma"; shots/sigma may be empty
    static NoiseCurve from_csv(const std::string& text);
    std::string to_csv() const;
};

}  // namespace zne
