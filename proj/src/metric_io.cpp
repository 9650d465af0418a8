#include "curvspec/metric_io.hpp"

#include <fstream>

namespace curvspec {

nlohmann::json metric_to_json(const MetricSpec& spec) {
  nlohmann::json j;
  j["name"] = spec.name();
  j["coords"] = spec.coords();
  j["params"] = spec.params();
  nlohmann::json comps = nlohmann::json::object();
  for (int i = 0; i < spec.dim(); ++i)
    for (int k = 0; k <= i; ++k)
      if (spec.component(i, k))
        comps[std::to_string(i) + "," + std::to_string(k)] =
            spec.component_source(i, k);
  j["components"] = comps;
  return j;
}

MetricSpec metric_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coords") || !j.contains("components"))
    throw Error("metric file needs 'coords' and 'components'");
  std::string name = j.value("name", std::string("metric"));
  std::vector<std::string> coords = j.at("coords").get<std::vector<std::string>>();
  std::map<std::string, double> params;
  if (j.contains("params")) params = j.at("params").get<std::map<std::string, double>>();
  std::map<std::string, std::string> components =
      j.at("components").get<std::map<std::string, std::string>>();
  return MetricSpec::make(std::move(name), std::move(coords), std::move(params),
                          components);
}

MetricSpec load_metric(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open metric file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw Error("cannot parse metric file '" + path + "': " + ex.what());
  }
  return metric_from_json(j);
}

void save_metric(const MetricSpec& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write metric file '" + path + "'");
  out << metric_to_json(spec).dump(2) << "\n";
}

}  // namespace curvspec
