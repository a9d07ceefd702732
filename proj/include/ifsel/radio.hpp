#pragma once

#include <optional>
#include <string>

namespace ifsel::radio {

enum class CellKind { Macrocell, Microcell };

// Okumura-Hata parameterization of one access network's propagation
// environment. Distances fed to path_loss_db are in kilometers (the
// classical convention); heights in meters, carrier frequency in MHz.
struct PathLossModel {
  CellKind kind = CellKind::Macrocell;
  double carrier_freq_mhz = 0.0;
  double base_height_m = 0.0;   // BS height (macrocell) or AP height (microcell)
  double mobile_height_m = 0.0;

  void validate() const;

  // The macrocell fit is calibrated for 150-2000 MHz. Outside that range
  // callers get a warning string, never a rejection.
  std::optional<std::string> frequency_range_warning() const;
};

struct LinkBudget {
  double tx_power_dbm = 0.0;
  double rx_sensitivity_dbm = 0.0;

  void validate() const;  // finite fields, tx_power > rx_sensitivity
};

// Small/medium-city mobile antenna height correction a(h_m), in dB.
// Affine in mobile_height at fixed frequency.
double mobile_antenna_correction(double freq_mhz, double mobile_height_m);

// Path loss in dB at the given distance, per the model kind. Strictly
// increasing in distance while the distance-slope coefficient
// (44.9 - 6.55 log10 h_b macrocell, 46.84 - 2.34 log10 h_b microcell)
// stays positive.
double path_loss_db(const PathLossModel& model, double distance_km);

double received_power_dbm(const LinkBudget& budget, double loss_db);

// Boundary inclusive: rx == sensitivity counts as reachable.
bool is_reachable(double rx_dbm, double sensitivity_dbm);

}  // namespace ifsel::radio
