#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ifsel/errors.hpp"
#include "ifsel/radio.hpp"

using namespace ifsel;
using radio::CellKind;
using radio::PathLossModel;

namespace {

const PathLossModel kUmtsModel{CellKind::Macrocell, 2000.0, 100.0, 2.0};
const PathLossModel kWlanModel{CellKind::Microcell, 2400.0, 2.0, 2.0};

}  // namespace

TEST_CASE("mobile antenna correction matches hand-computed values") {
  // frozen from an independent evaluation of the closed form
  CHECK(radio::mobile_antenna_correction(2000.0, 2.0) ==
        doctest::Approx(1.5126591972249486).epsilon(1e-12));
  CHECK(radio::mobile_antenna_correction(900.0, 1.5) ==
        doctest::Approx(0.015881825849539677).epsilon(1e-9));
}

TEST_CASE("antenna correction loses its height dependence where the coefficient vanishes") {
  const double f0 = std::pow(10.0, 0.7 / 1.1);
  CHECK(radio::mobile_antenna_correction(f0, 1.0) ==
        doctest::Approx(radio::mobile_antenna_correction(f0, 7.0)).epsilon(1e-12));
}

TEST_CASE("antenna correction is affine in mobile height") {
  std::mt19937 rng(7101);
  std::uniform_real_distribution<double> freq(150.0, 2400.0);
  std::uniform_real_distribution<double> height(0.5, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double f = freq(rng);
    const double h1 = height(rng), h2 = height(rng), h3 = height(rng);
    const double a1 = radio::mobile_antenna_correction(f, h1);
    const double a2 = radio::mobile_antenna_correction(f, h2);
    const double a3 = radio::mobile_antenna_correction(f, h3);
    // equal slopes between any two point pairs
    CHECK((a3 - a1) * (h2 - h1) == doctest::Approx((a2 - a1) * (h3 - h1)).epsilon(1e-9));
  }
}

TEST_CASE("antenna correction rejects non-positive inputs") {
  CHECK_THROWS_AS(radio::mobile_antenna_correction(0.0, 2.0), std::domain_error);
  CHECK_THROWS_AS(radio::mobile_antenna_correction(900.0, -1.0), std::domain_error);
}

TEST_CASE("macrocell path loss matches the frozen spot values") {
  CHECK(radio::path_loss_db(kUmtsModel, 1.0) ==
        doctest::Approx(126.75228548934483).epsilon(1e-12));
  CHECK(radio::path_loss_db(kUmtsModel, 2.0) ==
        doctest::Approx(136.32503935145942).epsilon(1e-12));
}

TEST_CASE("microcell path loss matches the frozen spot value") {
  CHECK(radio::path_loss_db(kWlanModel, 0.010) ==
        doctest::Approx(83.85551911032212).epsilon(1e-12));
}

TEST_CASE("path loss at 1 km equals the constant part exactly") {
  std::mt19937 rng(7102);
  std::uniform_real_distribution<double> freq(150.0, 2400.0);
  std::uniform_real_distribution<double> hb(1.0, 200.0);
  std::uniform_real_distribution<double> hm(0.5, 10.0);
  for (int trial = 0; trial < 100; ++trial) {
    PathLossModel m{trial % 2 ? CellKind::Macrocell : CellKind::Microcell, freq(rng), hb(rng),
                    hm(rng)};
    double constant_part;
    if (m.kind == CellKind::Macrocell) {
      constant_part = 69.55 + 26.16 * std::log10(m.carrier_freq_mhz) -
                      13.82 * std::log10(m.base_height_m) -
                      radio::mobile_antenna_correction(m.carrier_freq_mhz, m.mobile_height_m);
    } else {
      constant_part = 135.41 + 12.49 * std::log10(m.carrier_freq_mhz) -
                      4.99 * std::log10(m.base_height_m);
    }
    CHECK(radio::path_loss_db(m, 1.0) == doctest::Approx(constant_part).epsilon(1e-12));
  }
}

TEST_CASE("path loss is strictly increasing in distance") {
  std::mt19937 rng(7103);
  std::uniform_real_distribution<double> freq(150.0, 2400.0);
  std::uniform_real_distribution<double> hb(1.0, 200.0);  // slope coefficient stays positive
  std::uniform_real_distribution<double> hm(0.5, 10.0);
  std::uniform_real_distribution<double> dist(0.001, 20.0);
  for (int trial = 0; trial < 1000; ++trial) {
    PathLossModel m{trial % 2 ? CellKind::Macrocell : CellKind::Microcell, freq(rng), hb(rng),
                    hm(rng)};
    double d1 = dist(rng), d2 = dist(rng);
    if (d1 == d2) continue;
    if (d1 > d2) std::swap(d1, d2);
    CHECK(radio::path_loss_db(m, d1) < radio::path_loss_db(m, d2));
  }
}

TEST_CASE("received power follows the link budget") {
  const radio::LinkBudget umts{61.76, -100.0};
  const radio::LinkBudget wlan{20.0, -100.0};
  CHECK(radio::received_power_dbm(umts, 126.75228548934483) ==
        doctest::Approx(-64.99228548934482).epsilon(1e-12));
  CHECK(radio::received_power_dbm(wlan, 0.0) == 20.0);
  CHECK(radio::received_power_dbm(wlan, 83.85551911032212) ==
        doctest::Approx(-63.85551911032212).epsilon(1e-12));
  CHECK_THROWS_AS(radio::received_power_dbm(wlan, -0.5), std::domain_error);
}

TEST_CASE("received power is strictly decreasing in distance") {
  const radio::LinkBudget budget{61.76, -100.0};
  std::mt19937 rng(7104);
  std::uniform_real_distribution<double> dist(0.01, 20.0);
  for (int trial = 0; trial < 200; ++trial) {
    double d1 = dist(rng), d2 = dist(rng);
    if (d1 == d2) continue;
    if (d1 > d2) std::swap(d1, d2);
    const double rx1 = radio::received_power_dbm(budget, radio::path_loss_db(kUmtsModel, d1));
    const double rx2 = radio::received_power_dbm(budget, radio::path_loss_db(kUmtsModel, d2));
    CHECK(rx1 > rx2);
  }
}

TEST_CASE("reachability boundary is inclusive") {
  CHECK(radio::is_reachable(-64.992, -100.0));
  CHECK(radio::is_reachable(-100.0, -100.0));
  CHECK_FALSE(radio::is_reachable(-100.01, -100.0));
}

TEST_CASE("path loss rejects non-positive distance") {
  CHECK_THROWS_AS(radio::path_loss_db(kUmtsModel, 0.0), std::domain_error);
  CHECK_THROWS_AS(radio::path_loss_db(kUmtsModel, -1.0), std::domain_error);
}

TEST_CASE("model validation and frequency range warning") {
  PathLossModel bad = kUmtsModel;
  bad.carrier_freq_mhz = 0.0;
  CHECK_THROWS_AS(bad.validate(), ValidationError);

  CHECK_FALSE(kUmtsModel.frequency_range_warning().has_value());  // 2000 MHz is in range
  PathLossModel high = kUmtsModel;
  high.carrier_freq_mhz = 2400.0;
  CHECK(high.frequency_range_warning().has_value());
  CHECK_FALSE(kWlanModel.frequency_range_warning().has_value());  // microcell: no range check
}

TEST_CASE("link budget validation") {
  CHECK_THROWS_AS((radio::LinkBudget{-100.0, -100.0}.validate()), ValidationError);
  CHECK_NOTHROW((radio::LinkBudget{20.0, -100.0}.validate()));
}
