#ifndef BLOCHSEP_IO_HPP
#define BLOCHSEP_IO_HPP

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "blochsep/detect.hpp"

namespace blochsep {

inline constexpr const char* kToolVersion = "0.1.0";

/// State file schema:
///   { "dims": [3, 1, 3],
///     "matrix": [ [ [re, im], ... ], ... ] }   row-major, size prod(dims)^2
nlohmann::json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const nlohmann::json& j);

DensityMatrix load_state(const std::string& path);
void save_state(const DensityMatrix& rho, const std::string& path);

/// Report schema: verdict, min_eigenvalue, witness R1/R2 (nested real
/// arrays, absent when inconclusive), strategy, samples, seed,
/// candidates_tested, version, wall_time_s.
nlohmann::json report_to_json(const DetectionReport& rep,
                              const std::array<int, 2>& dims,
                              double wall_time_s);
DetectionReport report_from_json(const nlohmann::json& j);

std::string strategy_name(StrategyKind kind);
StrategyKind strategy_from_name(const std::string& name);

}  // namespace blochsep

#endif  // BLOCHSEP_IO_HPP
