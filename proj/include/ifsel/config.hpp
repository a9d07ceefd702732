#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ifsel/decision.hpp"

namespace ifsel::config {

// Full run configuration: the candidate interfaces, scaling factors,
// policy thresholds, and calibration constants. The shipped defaults
// model one UMTS macrocell and one WLAN AP held at 10 m.
struct ConfigFile {
  std::vector<decision::InterfaceProfile> interfaces;
  scoring::ScalingFactors scaling_factors;
  decision::PolicyConfig policy;
  power::CalibrationConstants calibration;
  double distance_to_ap_m = 10.0;

  void validate() const;
};

ConfigFile default_config();

ConfigFile from_json(const nlohmann::json& j);
nlohmann::json to_json(const ConfigFile& cfg);

// Parses a config file (JSON, // and /* */ comments allowed), validates
// it, and returns it. Throws ValidationError naming the failed invariant.
ConfigFile load_file(const std::string& path);

std::string serialize(const ConfigFile& cfg);

// Warnings (for example, a macrocell carrier frequency outside the model
// calibration range) that callers should surface without failing.
std::vector<std::string> collect_warnings(const ConfigFile& cfg);

}  // namespace ifsel::config
