#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ifsel/radio.hpp"

namespace ifsel::decision {
struct InterfaceProfile;
}

namespace ifsel::power {

// Per-state power draw and occupancy probabilities for one interface over
// a reference window of duration_s seconds. state_powers_mw and
// state_probs are parallel lists in the same order.
struct PowerStateProfile {
  std::vector<std::pair<std::string, double>> state_powers_mw;  // (state name, mW)
  std::vector<double> state_probs;
  double duration_s = 1.0;

  void validate() const;
  // index of the named state, or -1
  int find_state(const std::string& name) const;
};

struct BatteryProfile {
  double level = 1.0;      // charge fraction in [0, 1]
  double threshold = 0.2;  // low-power threshold in (0, 1)

  void validate() const;
};

// Power-consumption ranks over a candidate set: 1 for the least
// power-hungry interface up to N for the most.
struct PowerRankAssignment {
  std::map<std::string, int> ranks;
};

// Constants relating distance to transmit power and anchoring the scaled
// dynamic merit values. Shipped values are fitted so the UMTS/WLAN
// consumption crossover lands on the configured threshold distance; see
// fit_tx_power_ref and the calibrate CLI command.
struct CalibrationConstants {
  double tx_power_ref_mw = 1.0;          // mobile transmit power at ref_distance_m
  double ref_distance_m = 100.0;
  double signal_anchor = 0.3;            // reference scaled signal level
  double consumption_anchor_mws = 835.0; // reference consumption for merit scaling
  double benefit_cap = 4.0;              // ceiling on dynamic merit values

  void validate() const;
};

// Mean energy over the profile window: duration * sum(prob_i * power_i),
// in mW*s. Mismatched list lengths raise std::invalid_argument;
// probabilities outside [0,1] or not summing to 1 raise ValidationError.
double mean_consumption(const PowerStateProfile& profile);

// Mobile transmit power required at the given distance: scales with the
// linear path-loss ratio relative to the reference distance, so it is
// strictly increasing in distance.
double umts_tx_power_at_distance(const radio::PathLossModel& model, double distance_m,
                                 const CalibrationConstants& calib);

// Mean consumption of one interface at the given MN-BS distance. UMTS
// profiles get their transmit-state power replaced by
// umts_tx_power_at_distance; WLAN profiles are evaluated as configured
// (the MN-AP distance is fixed, so their consumption is constant).
double interface_consumption(const decision::InterfaceProfile& iface, double distance_m,
                             const CalibrationConstants& calib);

// Ranks ascending by interface_consumption; ties break lexicographically
// by interface id. Empty input raises std::domain_error.
PowerRankAssignment power_rank(const std::vector<decision::InterfaceProfile>& interfaces,
                               double distance_m, const CalibrationConstants& calib);

// The battery-level divisor L_p: 1 while the charge level exceeds the
// threshold (strictly), otherwise the interface's power rank k.
double battery_level_factor(const BatteryProfile& battery, int k);

// Distance where the UMTS and WLAN consumption curves intersect, located
// by bisection. Requires exactly one interface of each technology.
double consumption_crossover_m(const std::vector<decision::InterfaceProfile>& interfaces,
                               const CalibrationConstants& calib);

// Root-finds tx_power_ref_mw (holding every other constant) so the
// consumption crossover lands on target_crossover_m. Throws
// std::runtime_error with a bracket report when no admissible value
// exists in [1e-9, 1e9] mW.
double fit_tx_power_ref(const std::vector<decision::InterfaceProfile>& interfaces,
                        const CalibrationConstants& base, double target_crossover_m);

}  // namespace ifsel::power
