#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "curvspec/geometry.hpp"

namespace curvspec {

// Metric file format:
// {
//   "name": "schwarzschild",
//   "coords": ["t", "r", "theta", "phi"],
//   "params": {"rs": 2.0, "c": 1.0},
//   "components": {"0,0": "-(c^2)*(1 - rs/r)", "1,1": "1/(1 - rs/r)", ...}
// }
// Components are keyed "i,j" (0-based); omitted components are zero.

nlohmann::json metric_to_json(const MetricSpec& spec);
MetricSpec metric_from_json(const nlohmann::json& j);

MetricSpec load_metric(const std::string& path);
void save_metric(const MetricSpec& spec, const std::string& path);

}  // namespace curvspec
