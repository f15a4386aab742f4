#pragma once

#include <string>

#include "zne/bench/scenarios.hpp"

namespace zne::bench {

// JSON (full records + config echo + aggregates) and CSV (per-record rows)
// renderings of each scenario result. write_report creates <dir>/<name>.json
// and <dir>/<name>.csv.
std::string table2_json(const Table2Config& cfg, const Table2Result& r);
std::string table2_csv(const Table2Result& r);

std::string rb_decay_json(const RbDecayConfig& cfg, const RbDecayResult& r);
std::string rb_decay_csv(const RbDecayResult& r);

std::string random6_json(const Random6Config& cfg, const Random6Result& r);
std::string random6_csv(const Random6Result& r);

std::string param_noise_json(const ParamNoiseConfig& cfg, const ParamNoiseResult& r);
std::string param_noise_csv(const ParamNoiseResult& r);

std::string adaptive_compare_json(const AdaptiveCompareConfig& cfg, const AdaptiveCompareResult& r);
std::string adaptive_compare_csv(const AdaptiveCompareResult& r);

void write_file(const std::string& path, const std::string& contents);

}  // namespace zne::bench
