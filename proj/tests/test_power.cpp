#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "ifsel/config.hpp"
#include "ifsel/errors.hpp"
#include "ifsel/power.hpp"

using namespace ifsel;
using power::PowerStateProfile;

namespace {

PowerStateProfile four_states(std::vector<double> powers, std::vector<double> probs,
                              double duration = 1.0) {
  PowerStateProfile p;
  const char* names[] = {"transmit", "receive", "idle", "sleep"};
  for (std::size_t i = 0; i < powers.size(); ++i)
    p.state_powers_mw.emplace_back(names[i], powers[i]);
  p.state_probs = std::move(probs);
  p.duration_s = duration;
  return p;
}

}  // namespace

TEST_CASE("mean consumption is the probability-weighted power over the window") {
  CHECK(power::mean_consumption(four_states({1000, 800, 400, 50}, {0.25, 0.25, 0.25, 0.25})) ==
        doctest::Approx(562.5).epsilon(1e-12));
  // degenerate distribution picks out one state
  CHECK(power::mean_consumption(four_states({123, 9, 9, 9}, {1, 0, 0, 0})) ==
        doctest::Approx(123.0));
  // constant power times the window length
  CHECK(power::mean_consumption(four_states({70, 70, 70, 70}, {0.1, 0.2, 0.3, 0.4}, 10.0)) ==
        doctest::Approx(700.0).epsilon(1e-12));
}

TEST_CASE("mean consumption is linear in duration and in each state power") {
  std::mt19937 rng(7201);
  std::uniform_real_distribution<double> pw(0.0, 2000.0);
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    auto base = four_states({pw(rng), pw(rng), pw(rng), pw(rng)}, {0.1, 0.2, 0.3, 0.4});
    const double c = scale(rng);
    auto longer = base;
    longer.duration_s *= c;
    CHECK(power::mean_consumption(longer) ==
          doctest::Approx(c * power::mean_consumption(base)).epsilon(1e-12));
    auto boosted = base;
    const double before = boosted.state_powers_mw[1].second;
    boosted.state_powers_mw[1].second = before * c;
    CHECK(power::mean_consumption(boosted) - power::mean_consumption(base) ==
          doctest::Approx(0.2 * before * (c - 1.0)).epsilon(1e-9));
  }
}

TEST_CASE("mean consumption error paths") {
  auto bad = four_states({1, 2, 3, 4}, {0.5, 0.5});
  CHECK_THROWS_AS(power::mean_consumption(bad), std::invalid_argument);
  auto off = four_states({1, 2, 3, 4}, {0.3, 0.3, 0.3, 0.3});
  CHECK_THROWS_AS(power::mean_consumption(off), ValidationError);
  auto negative = four_states({1, -2, 3, 4}, {0.25, 0.25, 0.25, 0.25});
  CHECK_THROWS_AS(power::mean_consumption(negative), ValidationError);
}

TEST_CASE("transmit power scales with the linear path-loss ratio") {
  const auto cfg = config::default_config();
  const auto& model = cfg.interfaces[0].path_model;
  const auto& calib = cfg.calibration;

  CHECK(power::umts_tx_power_at_distance(model, calib.ref_distance_m, calib) ==
        doctest::Approx(calib.tx_power_ref_mw).epsilon(1e-12));
  // doubling the distance with a 31.8 dB/decade slope multiplies by 10^0.95727...
  CHECK(power::umts_tx_power_at_distance(model, 2.0 * calib.ref_distance_m, calib) /
            calib.tx_power_ref_mw ==
        doctest::Approx(9.06307108236639).epsilon(1e-9));
  CHECK_THROWS_AS(power::umts_tx_power_at_distance(model, 0.0, calib), std::domain_error);
}

TEST_CASE("transmit power is strictly increasing in distance") {
  const auto cfg = config::default_config();
  std::mt19937 rng(7202);
  std::uniform_real_distribution<double> dist(1.0, 20000.0);
  for (int trial = 0; trial < 500; ++trial) {
    double d1 = dist(rng), d2 = dist(rng);
    if (d1 == d2) continue;
    if (d1 > d2) std::swap(d1, d2);
    CHECK(power::umts_tx_power_at_distance(cfg.interfaces[0].path_model, d1, cfg.calibration) <
          power::umts_tx_power_at_distance(cfg.interfaces[0].path_model, d2, cfg.calibration));
  }
}

TEST_CASE("interface consumption: WLAN constant, UMTS crossing at the calibrated distance") {
  const auto cfg = config::default_config();
  const auto& umts = cfg.interfaces[0];
  const auto& wlan = cfg.interfaces[1];

  const double wlan_base = power::interface_consumption(wlan, 500.0, cfg.calibration);
  for (double d : {10.0, 100.0, 920.0, 2000.0, 5000.0})
    CHECK(power::interface_consumption(wlan, d, cfg.calibration) == wlan_base);

  const double umts_at_crossover = power::interface_consumption(umts, 920.0, cfg.calibration);
  CHECK(std::abs(umts_at_crossover - wlan_base) / wlan_base < 0.01);
  CHECK(power::interface_consumption(umts, 100.0, cfg.calibration) < wlan_base);

  // strictly increasing in distance
  std::mt19937 rng(7203);
  std::uniform_real_distribution<double> dist(1.0, 20000.0);
  for (int trial = 0; trial < 300; ++trial) {
    double d1 = dist(rng), d2 = dist(rng);
    if (d1 == d2) continue;
    if (d1 > d2) std::swap(d1, d2);
    CHECK(power::interface_consumption(umts, d1, cfg.calibration) <
          power::interface_consumption(umts, d2, cfg.calibration));
  }
}

TEST_CASE("consumption difference changes sign exactly once over (0, 5000]") {
  const auto cfg = config::default_config();
  const double wlan_cons = power::mean_consumption(cfg.interfaces[1].power_profile);
  int flips = 0;
  bool last_below = true;
  for (double d = 1.0; d <= 5000.0; d += 1.0) {
    const bool below =
        power::interface_consumption(cfg.interfaces[0], d, cfg.calibration) < wlan_cons;
    if (d > 1.0 && below != last_below) ++flips;
    last_below = below;
  }
  CHECK(flips == 1);
}

TEST_CASE("power rank orders by consumption with lexicographic ties") {
  const auto cfg = config::default_config();
  auto at_100 = power::power_rank(cfg.interfaces, 100.0, cfg.calibration);
  CHECK(at_100.ranks.at("UMTS") == 1);
  CHECK(at_100.ranks.at("WLAN") == 2);
  auto at_1500 = power::power_rank(cfg.interfaces, 1500.0, cfg.calibration);
  CHECK(at_1500.ranks.at("UMTS") == 2);
  CHECK(at_1500.ranks.at("WLAN") == 1);

  auto single = power::power_rank({cfg.interfaces[0]}, 100.0, cfg.calibration);
  CHECK(single.ranks.at("UMTS") == 1);
  CHECK_THROWS_AS(power::power_rank({}, 100.0, cfg.calibration), std::domain_error);

  // identical profiles tie; ids break the tie
  auto a = cfg.interfaces[1], b = cfg.interfaces[1];
  a.id = "wlan_b";
  b.id = "wlan_a";
  auto tied = power::power_rank({a, b}, 100.0, cfg.calibration);
  CHECK(tied.ranks.at("wlan_a") == 1);
  CHECK(tied.ranks.at("wlan_b") == 2);
}

TEST_CASE("power rank is a permutation with rank 1 minimal (random cross-check)") {
  const auto cfg = config::default_config();
  std::mt19937 rng(7204);
  std::uniform_real_distribution<double> pw(1.0, 2000.0);
  std::uniform_int_distribution<int> count(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<decision::InterfaceProfile> profiles;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
      auto p = cfg.interfaces[1];  // WLAN template: consumption independent of distance
      p.id = "iface_" + std::to_string(i);
      for (auto& [name, value] : p.power_profile.state_powers_mw) value = pw(rng);
      profiles.push_back(p);
    }
    auto assignment = power::power_rank(profiles, 700.0, cfg.calibration);

    // brute force: sort (consumption, id) pairs independently
    std::vector<std::pair<double, std::string>> expected;
    for (const auto& p : profiles)
      expected.emplace_back(power::interface_consumption(p, 700.0, cfg.calibration), p.id);
    std::sort(expected.begin(), expected.end());

    std::vector<int> seen;
    for (const auto& [id, rank] : assignment.ranks) seen.push_back(rank);
    std::sort(seen.begin(), seen.end());
    for (int i = 0; i < n; ++i) CHECK(seen[i] == i + 1);  // permutation of 1..N
    for (int i = 0; i < n; ++i) CHECK(assignment.ranks.at(expected[i].second) == i + 1);
  }
}

TEST_CASE("battery level factor follows the threshold rule") {
  CHECK(power::battery_level_factor({0.8, 0.2}, 2) == 1.0);
  CHECK(power::battery_level_factor({0.1, 0.2}, 2) == 2.0);
  // boundary: equality is not "greater than"
  CHECK(power::battery_level_factor({0.2, 0.2}, 3) == 3.0);
  CHECK_THROWS_AS(power::battery_level_factor({0.5, 0.2}, 0), std::domain_error);

  std::mt19937 rng(7205);
  std::uniform_int_distribution<int> k(1, 50);
  for (int trial = 0; trial < 200; ++trial)
    CHECK(power::battery_level_factor({0.9, 0.2}, k(rng)) == 1.0);
}

TEST_CASE("fitting the reference transmit power reproduces the target crossover") {
  const auto cfg = config::default_config();
  const double p0 = power::fit_tx_power_ref(cfg.interfaces, cfg.calibration, 920.0);
  CHECK(p0 == doctest::Approx(cfg.calibration.tx_power_ref_mw).epsilon(1e-9));

  auto calib = cfg.calibration;
  calib.tx_power_ref_mw = p0;
  CHECK(power::consumption_crossover_m(cfg.interfaces, calib) ==
        doctest::Approx(920.0).epsilon(1e-6));

  CHECK_THROWS_AS(power::fit_tx_power_ref(cfg.interfaces, cfg.calibration, -5.0),
                  std::domain_error);
  CHECK_THROWS_AS(power::fit_tx_power_ref(cfg.interfaces, cfg.calibration, 1e9),
                  std::runtime_error);
}

TEST_CASE("profile and battery validation") {
  auto p = four_states({1, 2, 3, 4}, {0.25, 0.25, 0.25, 0.25});
  CHECK_NOTHROW(p.validate());
  p.duration_s = 0.0;
  CHECK_THROWS_AS(p.validate(), ValidationError);

  CHECK_THROWS_AS((power::BatteryProfile{1.5, 0.2}.validate()), ValidationError);
  CHECK_THROWS_AS((power::BatteryProfile{0.5, 0.0}.validate()), ValidationError);
  CHECK_NOTHROW((power::BatteryProfile{0.5, 0.2}.validate()));
}
