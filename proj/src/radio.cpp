#include "ifsel/radio.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ifsel/errors.hpp"

namespace ifsel::radio {

void PathLossModel::validate() const {
  if (!(carrier_freq_mhz > 0.0))
    throw ValidationError("path model: carrier_freq_mhz must be > 0");
  if (!(base_height_m > 0.0))
    throw ValidationError("path model: base_height_m must be > 0");
  if (!(mobile_height_m > 0.0))
    throw ValidationError("path model: mobile_height_m must be > 0");
}

std::optional<std::string> PathLossModel::frequency_range_warning() const {
  if (kind != CellKind::Macrocell) return std::nullopt;
  if (carrier_freq_mhz >= 150.0 && carrier_freq_mhz <= 2000.0) return std::nullopt;
  std::ostringstream os;
  os << "macrocell model used outside its 150-2000 MHz calibration range (f_c = "
     << carrier_freq_mhz << " MHz)";
  return os.str();
}

void LinkBudget::validate() const {
  if (!std::isfinite(tx_power_dbm) || !std::isfinite(rx_sensitivity_dbm))
    throw ValidationError("link budget: tx_power and rx_sensitivity must be finite");
  if (!(tx_power_dbm > rx_sensitivity_dbm))
    throw ValidationError("link budget: tx_power_dbm must exceed rx_sensitivity_dbm");
}

double mobile_antenna_correction(double freq_mhz, double mobile_height_m) {
  if (!(freq_mhz > 0.0))
    throw std::domain_error("mobile_antenna_correction: freq_mhz must be > 0");
  if (!(mobile_height_m > 0.0))
    throw std::domain_error("mobile_antenna_correction: mobile_height_m must be > 0");
  const double lf = std::log10(freq_mhz);
  return (1.1 * lf - 0.7) * mobile_height_m - (1.56 * lf - 0.8);
}

double path_loss_db(const PathLossModel& model, double distance_km) {
  if (!(distance_km > 0.0))
    throw std::domain_error("path_loss: distance_km must be > 0");
  const double lf = std::log10(model.carrier_freq_mhz);
  const double lhb = std::log10(model.base_height_m);
  const double ld = std::log10(distance_km);
  if (model.kind == CellKind::Macrocell) {
    const double a = mobile_antenna_correction(model.carrier_freq_mhz, model.mobile_height_m);
    return 69.55 + 26.16 * lf - 13.82 * lhb - a + (44.9 - 6.55 * lhb) * ld;
  }
  return 135.41 + 12.49 * lf - 4.99 * lhb + (46.84 - 2.34 * lhb) * ld;
}

double received_power_dbm(const LinkBudget& budget, double loss_db) {
  if (loss_db < 0.0)
    throw std::domain_error("received_power: loss_db must be >= 0");
  return budget.tx_power_dbm - loss_db;
}

bool is_reachable(double rx_dbm, double sensitivity_dbm) {
  return rx_dbm >= sensitivity_dbm;
}

}  // namespace ifsel::radio
