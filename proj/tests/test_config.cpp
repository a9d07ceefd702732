#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ifsel/config.hpp"
#include "ifsel/errors.hpp"

using namespace ifsel;
using scoring::Parameter;

TEST_CASE("defaults validate and carry the shipped scaling factors") {
  const auto cfg = config::default_config();
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.scaling_factors.values.at(Parameter::Cost) == 0.4);
  CHECK(cfg.scaling_factors.values.at(Parameter::Throughput) == 0.2);
  CHECK(cfg.scaling_factors.values.at(Parameter::QosQoe) == 0.09);
  CHECK(cfg.scaling_factors.values.at(Parameter::CellCoverage) == 0.05);
  CHECK(cfg.scaling_factors.values.at(Parameter::Security) == 0.08);
  CHECK(cfg.scaling_factors.values.at(Parameter::SignalStrength) == 0.08);
  CHECK(cfg.scaling_factors.values.at(Parameter::PowerConsumption) == 0.1);
}

TEST_CASE("serialize/parse round trip is the identity on the defaults") {
  const auto cfg = config::default_config();
  const std::string once = config::serialize(cfg);
  const auto reparsed = config::from_json(nlohmann::json::parse(once));
  CHECK(config::to_json(reparsed) == config::to_json(cfg));
  CHECK(config::serialize(reparsed) == once);
}

TEST_CASE("the shipped config file matches the built-in defaults") {
  const auto from_file = config::load_file(IFSEL_SOURCE_DIR "/config/default.jsonc");
  CHECK(config::to_json(from_file) == config::to_json(config::default_config()));
}

TEST_CASE("validation rejects perturbed scaling factors") {
  for (Parameter p : scoring::kAllParameters) {
    auto cfg = config::default_config();
    cfg.scaling_factors.values[p] += 0.01;
    CHECK_THROWS_AS(cfg.validate(), ValidationError);
  }
}

TEST_CASE("validation requires all seven parameters") {
  auto cfg = config::default_config();
  // keep the sum at 1 but drop a parameter
  cfg.scaling_factors.values[Parameter::Cost] +=
      cfg.scaling_factors.values.at(Parameter::Security);
  cfg.scaling_factors.values.erase(Parameter::Security);
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
}

TEST_CASE("validation rejects duplicate interface ids") {
  auto cfg = config::default_config();
  cfg.interfaces.push_back(cfg.interfaces[0]);
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
}

TEST_CASE("parse errors name the offending field") {
  auto j = config::to_json(config::default_config());
  j.erase("calibration");
  CHECK_THROWS_WITH_AS(config::from_json(j), doctest::Contains("calibration"),
                       ValidationError);

  j = config::to_json(config::default_config());
  j["policy"]["scorer"] = "topsis";
  CHECK_THROWS_WITH_AS(config::from_json(j), doctest::Contains("scorer"), ValidationError);

  j = config::to_json(config::default_config());
  j["scaling_factors"]["bandwidth"] = 0.1;
  CHECK_THROWS_WITH_AS(config::from_json(j), doctest::Contains("bandwidth"), ValidationError);
}

TEST_CASE("probability and threshold invariants are enforced on load") {
  auto j = config::to_json(config::default_config());
  j["interfaces"][0]["power_profile"]["states"][0]["probability"] = 0.5;  // sum now 1.3
  CHECK_THROWS_AS(config::from_json(j), ValidationError);

  j = config::to_json(config::default_config());
  j["policy"]["battery_threshold"] = 1.5;
  CHECK_THROWS_AS(config::from_json(j), ValidationError);
}

TEST_CASE("comments are allowed in config files") {
  const auto cfg = config::default_config();
  const std::string with_comments = "// leading comment\n" + config::serialize(cfg);
  // parse through the same path load_file uses
  const auto j = nlohmann::json::parse(with_comments, nullptr, true, true);
  CHECK(config::to_json(config::from_json(j)) == config::to_json(cfg));
}

TEST_CASE("missing config files and broken JSON fail with a named error") {
  CHECK_THROWS_WITH_AS(config::load_file("/nonexistent/ifsel.jsonc"),
                       doctest::Contains("cannot open"), ValidationError);
}

TEST_CASE("frequency warnings are collected, not fatal") {
  auto cfg = config::default_config();
  CHECK(config::collect_warnings(cfg).empty());
  cfg.interfaces[0].path_model.carrier_freq_mhz = 2600.0;
  CHECK_NOTHROW(cfg.validate());
  CHECK(config::collect_warnings(cfg).size() == 1);
}
