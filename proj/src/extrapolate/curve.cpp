#include "zne/curve.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "zne/errors.hpp"

namespace zne {

bool NoiseCurve::all_sigmas_present() const {
    if (points.empty()) return false;
    for (const CurvePoint& p : points)
        if (!p.sigma) return false;
    return true;
}

int NoiseCurve::distinct_lambdas() const {
    std::vector<double> seen;
    for (const CurvePoint& p : points) {
        bool dup = false;
        for (double l : seen) dup = dup || (l == p.lambda);
        if (!dup) seen.push_back(p.lambda);
    }
    return static_cast<int>(seen.size());
}

NoiseCurve NoiseCurve::merged() const {
    std::map<double, CurvePoint> acc;
    std::map<double, double> wsum, wy, invvar;
    for (const CurvePoint& p : points) {
        const double w = p.shots > 0 ? static_cast<double>(p.shots) : 1.0;
        wsum[p.lambda] += w;
        wy[p.lambda] += w * p.y;
        auto& slot = acc[p.lambda];
        slot.lambda = p.lambda;
        slot.shots += p.shots;
        if (p.sigma) invvar[p.lambda] += 1.0 / (*p.sigma * *p.sigma);
    }
    NoiseCurve out;
    for (auto& [lambda, slot] : acc) {
        slot.y = wy[lambda] / wsum[lambda];
        if (invvar.count(lambda) && invvar[lambda] > 0.0) slot.sigma = std::sqrt(1.0 / invvar[lambda]);
        out.points.push_back(slot);
    }
    return out;
}

NoiseCurve NoiseCurve::from_csv(const std::string& text) {
    NoiseCurve curve;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        // tolerate \r\n and blank lines
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (line_no == 1 && line.rfind("lambda", 0) == 0) continue;

        std::vector<std::string> fields;
        std::string cur;
        for (char ch : line) {
            if (ch == ',') {
                fields.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        fields.push_back(cur);
        if (fields.size() < 2 || fields.size() > 4)
            throw ConfigError("curve csv line " + std::to_string(line_no) + ": expected 2-4 fields");

        CurvePoint p;
        try {
            p.lambda = std::stod(fields[0]);
            p.y = std::stod(fields[1]);
            if (fields.size() >= 3 && !fields[2].empty()) p.shots = std::stol(fields[2]);
            if (fields.size() >= 4 && !fields[3].empty()) p.sigma = std::stod(fields[3]);
        } catch (const std::exception&) {
            throw ConfigError("curve csv line " + std::to_string(line_no) + ": bad number");
        }
        if (!(p.lambda >= 1.0))
            throw ConfigError("curve csv line " + std::to_string(line_no) + ": lambda must be >= 1");
        curve.points.push_back(p);
    }
    if (curve.points.empty()) throw ConfigError("curve csv: no data points");
    return curve;
}

std::string NoiseCurve::to_csv() const {
    std::string out = "lambda,y,shots,sigma\n";
    char buf[128];
    for (const CurvePoint& p : points) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,", p.lambda, p.y);
        out += buf;
        if (p.shots > 0) out += std::to_string(p.shots);
        out += ',';
        if (p.sigma) {
            std::snprintf(buf, sizeof buf, "%.17g", *p.sigma);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

}  // namespace zne
