#include "ifsel/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "ifsel/errors.hpp"

namespace ifsel::config {

using nlohmann::json;

void ConfigFile::validate() const {
  if (interfaces.empty()) throw ValidationError("config: at least one interface is required");
  std::set<std::string> ids;
  for (const auto& iface : interfaces) {
    iface.validate();
    if (!ids.insert(iface.id).second)
      throw ValidationError("config: duplicate interface id '" + iface.id + "'");
  }
  scaling_factors.validate();
  for (scoring::Parameter p : scoring::kAllParameters)
    if (!scaling_factors.values.count(p))
      throw ValidationError("config: scaling_factors must name all seven parameters (missing " +
                            std::string(scoring::to_string(p)) + ")");
  policy.validate();
  calibration.validate();
  if (!(distance_to_ap_m > 0.0))
    throw ValidationError("config: distance_to_ap_m must be > 0");
}

ConfigFile default_config() {
  using scoring::Parameter;
  ConfigFile cfg;

  decision::InterfaceProfile umts;
  umts.id = "UMTS";
  umts.technology = decision::Technology::Umts;
  umts.link = {61.76, -100.0};  // 1.5 kW BS in dBm
  umts.path_model = {radio::CellKind::Macrocell, 2000.0, 100.0, 2.0};
  umts.power_profile.duration_s = 1.0;
  // transmit power is distance-derived; the configured value is the
  // reference-distance draw
  umts.power_profile.state_powers_mw = {{"transmit", 2.9671802888360927},
                                        {"receive", 300.0},
                                        {"signaling", 150.0},
                                        {"power_saving", 55.0}};
  umts.power_profile.state_probs = {0.2, 0.3, 0.3, 0.2};
  umts.static_ratios = {{Parameter::Cost, 1.0},
                        {Parameter::Throughput, 1.0},
                        {Parameter::QosQoe, 1.0},
                        {Parameter::CellCoverage, 100.0},
                        {Parameter::Security, 4.0}};

  decision::InterfaceProfile wlan;
  wlan.id = "WLAN";
  wlan.technology = decision::Technology::Wlan;
  wlan.link = {20.0, -100.0};  // 100 mW AP
  wlan.path_model = {radio::CellKind::Microcell, 2400.0, 2.0, 2.0};
  wlan.power_profile.duration_s = 1.0;
  wlan.power_profile.state_powers_mw = {{"transmit", 1400.0},
                                        {"receive", 900.0},
                                        {"idle", 700.0},
                                        {"sleep", 50.0}};
  wlan.power_profile.state_probs = {0.2, 0.3, 0.4, 0.1};
  wlan.static_ratios = {{Parameter::Cost, 10.0},
                        {Parameter::Throughput, 10.0},
                        {Parameter::QosQoe, 4.0},
                        {Parameter::CellCoverage, 1.0},
                        {Parameter::Security, 1.0}};
  wlan.coverage_m = 15.0;

  cfg.interfaces = {umts, wlan};
  cfg.scaling_factors.values = {
      {Parameter::Cost, 0.4},          {Parameter::Throughput, 0.2},
      {Parameter::QosQoe, 0.09},       {Parameter::CellCoverage, 0.05},
      {Parameter::Security, 0.08},     {Parameter::SignalStrength, 0.08},
      {Parameter::PowerConsumption, 0.1}};
  cfg.policy = {decision::Scorer::Proposed, 0.2, 920.0};
  // tx_power_ref fitted (calibrate --target 920) so the consumption
  // crossover lands at the 920 m threshold
  cfg.calibration = {2.9671802888360927, 100.0, 0.3, 835.0, 4.0};
  cfg.distance_to_ap_m = 10.0;
  return cfg;
}

namespace {

const json& require(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end())
    throw ValidationError("config: " + where + " is missing field '" + key + "'");
  return *it;
}

double require_number(const json& j, const char* key, const std::string& where) {
  const json& v = require(j, key, where);
  if (!v.is_number())
    throw ValidationError("config: " + where + "." + key + " must be a number");
  return v.get<double>();
}

scoring::Parameter parse_parameter(const std::string& name, const std::string& where) {
  auto p = scoring::parameter_from_string(name);
  if (!p) throw ValidationError("config: " + where + " names unknown parameter '" + name + "'");
  return *p;
}

decision::InterfaceProfile parse_interface(const json& j) {
  decision::InterfaceProfile iface;
  iface.id = require(j, "id", "interface").get<std::string>();
  const std::string where = "interface " + iface.id;

  const std::string tech = require(j, "technology", where).get<std::string>();
  if (tech == "UMTS")
    iface.technology = decision::Technology::Umts;
  else if (tech == "WLAN")
    iface.technology = decision::Technology::Wlan;
  else
    throw ValidationError("config: " + where + " has unknown technology '" + tech + "'");

  const json& link = require(j, "link", where);
  iface.link.tx_power_dbm = require_number(link, "tx_power_dbm", where + ".link");
  iface.link.rx_sensitivity_dbm = require_number(link, "rx_sensitivity_dbm", where + ".link");

  const json& model = require(j, "path_model", where);
  const std::string kind = require(model, "kind", where + ".path_model").get<std::string>();
  if (kind == "macrocell")
    iface.path_model.kind = radio::CellKind::Macrocell;
  else if (kind == "microcell")
    iface.path_model.kind = radio::CellKind::Microcell;
  else
    throw ValidationError("config: " + where + ".path_model has unknown kind '" + kind + "'");
  iface.path_model.carrier_freq_mhz =
      require_number(model, "carrier_freq_mhz", where + ".path_model");
  iface.path_model.base_height_m = require_number(model, "base_height_m", where + ".path_model");
  iface.path_model.mobile_height_m =
      require_number(model, "mobile_height_m", where + ".path_model");

  const json& profile = require(j, "power_profile", where);
  iface.power_profile.duration_s =
      require_number(profile, "duration_s", where + ".power_profile");
  const json& states = require(profile, "states", where + ".power_profile");
  if (!states.is_array())
    throw ValidationError("config: " + where + ".power_profile.states must be an array");
  for (const json& s : states) {
    const std::string sw = where + ".power_profile.states";
    iface.power_profile.state_powers_mw.emplace_back(require(s, "name", sw).get<std::string>(),
                                                     require_number(s, "power_mw", sw));
    iface.power_profile.state_probs.push_back(require_number(s, "probability", sw));
  }

  const json& ratios = require(j, "static_ratios", where);
  for (const auto& [name, value] : ratios.items()) {
    if (!value.is_number())
      throw ValidationError("config: " + where + ".static_ratios." + name +
                            " must be a number");
    iface.static_ratios[parse_parameter(name, where + ".static_ratios")] = value.get<double>();
  }

  if (j.contains("coverage_m")) iface.coverage_m = require_number(j, "coverage_m", where);
  return iface;
}

json interface_to_json(const decision::InterfaceProfile& iface) {
  json j;
  j["id"] = iface.id;
  j["technology"] = std::string(decision::to_string(iface.technology));
  j["link"] = {{"tx_power_dbm", iface.link.tx_power_dbm},
               {"rx_sensitivity_dbm", iface.link.rx_sensitivity_dbm}};
  j["path_model"] = {
      {"kind", iface.path_model.kind == radio::CellKind::Macrocell ? "macrocell" : "microcell"},
      {"carrier_freq_mhz", iface.path_model.carrier_freq_mhz},
      {"base_height_m", iface.path_model.base_height_m},
      {"mobile_height_m", iface.path_model.mobile_height_m}};
  json states = json::array();
  for (std::size_t i = 0; i < iface.power_profile.state_powers_mw.size(); ++i)
    states.push_back({{"name", iface.power_profile.state_powers_mw[i].first},
                      {"power_mw", iface.power_profile.state_powers_mw[i].second},
                      {"probability", iface.power_profile.state_probs[i]}});
  j["power_profile"] = {{"duration_s", iface.power_profile.duration_s}, {"states", states}};
  json ratios;
  for (const auto& [p, r] : iface.static_ratios)
    ratios[std::string(scoring::to_string(p))] = r;
  j["static_ratios"] = ratios;
  if (iface.coverage_m) j["coverage_m"] = *iface.coverage_m;
  return j;
}

}  // namespace

ConfigFile from_json(const json& j) {
  ConfigFile cfg;

  const json& ifaces = require(j, "interfaces", "config");
  if (!ifaces.is_array())
    throw ValidationError("config: interfaces must be an array");
  for (const json& entry : ifaces) cfg.interfaces.push_back(parse_interface(entry));

  const json& scaling = require(j, "scaling_factors", "config");
  for (const auto& [name, value] : scaling.items()) {
    if (!value.is_number())
      throw ValidationError("config: scaling_factors." + name + " must be a number");
    cfg.scaling_factors.values[parse_parameter(name, "scaling_factors")] = value.get<double>();
  }

  const json& policy = require(j, "policy", "config");
  const std::string scorer = require(policy, "scorer", "policy").get<std::string>();
  auto parsed = decision::scorer_from_string(scorer);
  if (!parsed)
    throw ValidationError("config: policy.scorer must be one of saw, wp, sf, proposed");
  cfg.policy.scorer = *parsed;
  cfg.policy.battery_threshold = require_number(policy, "battery_threshold", "policy");
  cfg.policy.distance_threshold_m = require_number(policy, "distance_threshold_m", "policy");

  const json& calib = require(j, "calibration", "config");
  cfg.calibration.tx_power_ref_mw = require_number(calib, "tx_power_ref_mw", "calibration");
  cfg.calibration.ref_distance_m = require_number(calib, "ref_distance_m", "calibration");
  cfg.calibration.signal_anchor = require_number(calib, "signal_anchor", "calibration");
  cfg.calibration.consumption_anchor_mws =
      require_number(calib, "consumption_anchor_mws", "calibration");
  cfg.calibration.benefit_cap = require_number(calib, "benefit_cap", "calibration");

  if (j.contains("distance_to_ap_m"))
    cfg.distance_to_ap_m = require_number(j, "distance_to_ap_m", "config");

  cfg.validate();
  return cfg;
}

json to_json(const ConfigFile& cfg) {
  json j;
  json ifaces = json::array();
  for (const auto& iface : cfg.interfaces) ifaces.push_back(interface_to_json(iface));
  j["interfaces"] = ifaces;
  json scaling;
  for (const auto& [p, s] : cfg.scaling_factors.values)
    scaling[std::string(scoring::to_string(p))] = s;
  j["scaling_factors"] = scaling;
  j["policy"] = {{"scorer", std::string(decision::to_string(cfg.policy.scorer))},
                 {"battery_threshold", cfg.policy.battery_threshold},
                 {"distance_threshold_m", cfg.policy.distance_threshold_m}};
  j["calibration"] = {{"tx_power_ref_mw", cfg.calibration.tx_power_ref_mw},
                      {"ref_distance_m", cfg.calibration.ref_distance_m},
                      {"signal_anchor", cfg.calibration.signal_anchor},
                      {"consumption_anchor_mws", cfg.calibration.consumption_anchor_mws},
                      {"benefit_cap", cfg.calibration.benefit_cap}};
  j["distance_to_ap_m"] = cfg.distance_to_ap_m;
  return j;
}

ConfigFile load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("config: cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ValidationError("config: " + path + " is not valid JSON: " + e.what());
  }
  return from_json(j);
}

std::string serialize(const ConfigFile& cfg) {
  return to_json(cfg).dump(2) + "\n";
}

std::vector<std::string> collect_warnings(const ConfigFile& cfg) {
  std::vector<std::string> out;
  for (const auto& iface : cfg.interfaces)
    if (auto w = iface.path_model.frequency_range_warning())
      out.push_back(iface.id + ": " + *w);
  return out;
}

}  // namespace ifsel::config
