#include "ifsel/power.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ifsel/decision.hpp"
#include "ifsel/errors.hpp"

namespace ifsel::power {

namespace {

constexpr double kProbSumTolerance = 1e-9;

void check_probs(const std::vector<double>& probs) {
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0 && p <= 1.0))
      throw ValidationError("power profile: state probabilities must lie in [0, 1]");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kProbSumTolerance) {
    std::ostringstream os;
    os << "power profile: state probabilities must sum to 1 (got " << sum << ")";
    throw ValidationError(os.str());
  }
}

}  // namespace

void PowerStateProfile::validate() const {
  if (state_powers_mw.size() != state_probs.size())
    throw ValidationError("power profile: state power and probability lists differ in length");
  if (state_powers_mw.empty())
    throw ValidationError("power profile: at least one state is required");
  if (!(duration_s > 0.0))
    throw ValidationError("power profile: duration_s must be > 0");
  for (const auto& [name, p] : state_powers_mw) {
    if (name.empty()) throw ValidationError("power profile: state names must be non-empty");
    if (!(p >= 0.0)) throw ValidationError("power profile: state powers must be >= 0");
  }
  check_probs(state_probs);
}

int PowerStateProfile::find_state(const std::string& name) const {
  for (std::size_t i = 0; i < state_powers_mw.size(); ++i)
    if (state_powers_mw[i].first == name) return static_cast<int>(i);
  return -1;
}

void BatteryProfile::validate() const {
  if (!(level >= 0.0 && level <= 1.0))
    throw ValidationError("battery: level must lie in [0, 1]");
  if (!(threshold > 0.0 && threshold < 1.0))
    throw ValidationError("battery: threshold must lie in (0, 1)");
}

void CalibrationConstants::validate() const {
  if (!(tx_power_ref_mw > 0.0))
    throw ValidationError("calibration: tx_power_ref_mw must be > 0");
  if (!(ref_distance_m > 0.0))
    throw ValidationError("calibration: ref_distance_m must be > 0");
  if (!(signal_anchor > 0.0))
    throw ValidationError("calibration: signal_anchor must be > 0");
  if (!(consumption_anchor_mws > 0.0))
    throw ValidationError("calibration: consumption_anchor_mws must be > 0");
  if (!(benefit_cap > 0.0))
    throw ValidationError("calibration: benefit_cap must be > 0");
}

double mean_consumption(const PowerStateProfile& profile) {
  if (profile.state_powers_mw.size() != profile.state_probs.size())
    throw std::invalid_argument(
        "mean_consumption: state power and probability lists differ in length");
  if (profile.state_powers_mw.empty())
    throw std::invalid_argument("mean_consumption: profile has no states");
  if (!(profile.duration_s > 0.0))
    throw ValidationError("mean_consumption: duration_s must be > 0");
  check_probs(profile.state_probs);
  double acc = 0.0;
  for (std::size_t i = 0; i < profile.state_probs.size(); ++i) {
    const double power = profile.state_powers_mw[i].second;
    if (!(power >= 0.0))
      throw ValidationError("mean_consumption: state powers must be >= 0");
    acc += profile.state_probs[i] * power;
  }
  return profile.duration_s * acc;
}

double umts_tx_power_at_distance(const radio::PathLossModel& model, double distance_m,
                                 const CalibrationConstants& calib) {
  if (!(distance_m > 0.0))
    throw std::domain_error("umts_tx_power_at_distance: distance_m must be > 0");
  const double loss = radio::path_loss_db(model, distance_m / 1000.0);
  const double loss_ref = radio::path_loss_db(model, calib.ref_distance_m / 1000.0);
  return calib.tx_power_ref_mw * std::pow(10.0, (loss - loss_ref) / 10.0);
}

double interface_consumption(const decision::InterfaceProfile& iface, double distance_m,
                             const CalibrationConstants& calib) {
  if (!(distance_m > 0.0))
    throw std::domain_error("interface_consumption: distance_m must be > 0");
  if (iface.technology == decision::Technology::Wlan)
    return mean_consumption(iface.power_profile);
  const int tx = iface.power_profile.find_state("transmit");
  if (tx < 0)
    throw ValidationError("interface_consumption: UMTS profile lacks a transmit state");
  PowerStateProfile at_distance = iface.power_profile;
  at_distance.state_powers_mw[static_cast<std::size_t>(tx)].second =
      umts_tx_power_at_distance(iface.path_model, distance_m, calib);
  return mean_consumption(at_distance);
}

PowerRankAssignment power_rank(const std::vector<decision::InterfaceProfile>& interfaces,
                               double distance_m, const CalibrationConstants& calib) {
  if (interfaces.empty())
    throw std::domain_error("power_rank: at least one interface is required");
  std::vector<std::pair<double, std::string>> order;
  order.reserve(interfaces.size());
  for (const auto& iface : interfaces)
    order.emplace_back(interface_consumption(iface, distance_m, calib), iface.id);
  std::sort(order.begin(), order.end());
  PowerRankAssignment out;
  for (std::size_t i = 0; i < order.size(); ++i)
    out.ranks[order[i].second] = static_cast<int>(i) + 1;
  return out;
}

double battery_level_factor(const BatteryProfile& battery, int k) {
  if (k < 1) throw std::domain_error("battery_level_factor: k must be >= 1");
  return battery.level > battery.threshold ? 1.0 : static_cast<double>(k);
}

namespace {

const decision::InterfaceProfile& find_technology(
    const std::vector<decision::InterfaceProfile>& interfaces, decision::Technology tech,
    const char* what) {
  const decision::InterfaceProfile* found = nullptr;
  for (const auto& iface : interfaces) {
    if (iface.technology != tech) continue;
    if (found)
      throw ValidationError(std::string("calibration: more than one ") + what +
                            " interface configured");
    found = &iface;
  }
  if (!found)
    throw ValidationError(std::string("calibration: no ") + what + " interface configured");
  return *found;
}

double crossover_by_bisection(const decision::InterfaceProfile& umts,
                              const decision::InterfaceProfile& wlan,
                              const CalibrationConstants& calib) {
  const double wlan_cons = mean_consumption(wlan.power_profile);
  auto diff = [&](double d) { return interface_consumption(umts, d, calib) - wlan_cons; };
  double lo = 1e-3, hi = 1e7;
  double flo = diff(lo), fhi = diff(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) {
    std::ostringstream os;
    os << "no consumption crossover in [" << lo << ", " << hi << "] m";
    throw std::runtime_error(os.str());
  }
  for (int i = 0; i < 200 && (hi - lo) > 1e-9; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = diff(mid);
    if (fmid == 0.0) return mid;
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double consumption_crossover_m(const std::vector<decision::InterfaceProfile>& interfaces,
                               const CalibrationConstants& calib) {
  const auto& umts = find_technology(interfaces, decision::Technology::Umts, "UMTS");
  const auto& wlan = find_technology(interfaces, decision::Technology::Wlan, "WLAN");
  return crossover_by_bisection(umts, wlan, calib);
}

double fit_tx_power_ref(const std::vector<decision::InterfaceProfile>& interfaces,
                        const CalibrationConstants& base, double target_crossover_m) {
  if (!(target_crossover_m > 0.0))
    throw std::domain_error("fit_tx_power_ref: target crossover must be > 0");
  const auto& umts = find_technology(interfaces, decision::Technology::Umts, "UMTS");
  const auto& wlan = find_technology(interfaces, decision::Technology::Wlan, "WLAN");

  // crossover distance is strictly decreasing in the reference power
  auto crossover_at = [&](double p0) {
    CalibrationConstants c = base;
    c.tx_power_ref_mw = p0;
    return crossover_by_bisection(umts, wlan, c);
  };

  double lo = 1e-9, hi = 1e9;
  double clo, chi;
  try {
    clo = crossover_at(lo);  // far crossover
    chi = crossover_at(hi);  // near crossover
  } catch (const std::runtime_error&) {
    throw std::runtime_error(
        "fit_tx_power_ref: consumption curves never cross inside the distance bracket; "
        "tx_power_ref bracket was [1e-9, 1e9] mW");
  }
  if (target_crossover_m > clo || target_crossover_m < chi) {
    std::ostringstream os;
    os << "fit_tx_power_ref: target " << target_crossover_m
       << " m is outside the achievable range [" << chi << ", " << clo
       << "] m for tx_power_ref in [1e-9, 1e9] mW";
    throw std::runtime_error(os.str());
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = std::sqrt(lo * hi);  // bisect in log space
    if (crossover_at(mid) > target_crossover_m)
      lo = mid;
    else
      hi = mid;
  }
  return std::sqrt(lo * hi);
}

}  // namespace ifsel::power
