#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ifsel/power.hpp"
#include "ifsel/radio.hpp"
#include "ifsel/scoring.hpp"

namespace ifsel::decision {

enum class Technology { Umts, Wlan };

std::string_view to_string(Technology t);

// One candidate access network: the five static merit ratios plus the
// radio and power models driving the two distance-dependent parameters.
struct InterfaceProfile {
  std::string id;
  Technology technology = Technology::Umts;
  std::map<scoring::Parameter, double> static_ratios;
  radio::LinkBudget link;
  radio::PathLossModel path_model;
  power::PowerStateProfile power_profile;
  std::optional<double> coverage_m;  // availability radius, when bounded

  void validate() const;
};

enum class Scorer { Saw, WeightedProduct, ScoreFunction, Proposed };

std::string_view to_string(Scorer s);
std::optional<Scorer> scorer_from_string(std::string_view name);

struct PolicyConfig {
  Scorer scorer = Scorer::Proposed;
  double battery_threshold = 0.2;
  double distance_threshold_m = 920.0;

  void validate() const;
};

// Everything the decision engine knows at one instant: battery state,
// geometry, policy, and per-interface resource availability. Interfaces
// missing from the admission map count as not admitted.
struct DecisionContext {
  power::BatteryProfile battery;
  double distance_to_bs_m = 0.0;
  double distance_to_ap_m = 10.0;
  PolicyConfig policy;
  std::map<std::string, bool> admission;

  void validate() const;
};

// Interfaces ordered best-first by total weight; ties break
// lexicographically by id.
struct Ranking {
  std::vector<std::pair<std::string, double>> ordered;
};

enum class Attachment { None, Umts, Wlan };

std::string_view to_string(Attachment a);

struct CacState {
  Attachment attached = Attachment::None;
  double distance_threshold_m = 920.0;
  double battery_threshold = 0.2;

  void validate() const;  // thresholds > 0
};

// Diagnostic row for one candidate, produced alongside a ranking.
struct InterfaceAssessment {
  std::string id;
  scoring::ParameterVector params;
  double consumption_mws = 0.0;
  int power_rank = 0;
  double lp = 1.0;
  double weight = 0.0;
};

// Raised when no configured interface is reachable in the given context.
class NoCandidateError : public std::runtime_error {
 public:
  explicit NoCandidateError(const std::string& msg) : std::runtime_error(msg) {}
};

// Assembles the seven scaled merit values for one candidate. The five
// static parameters are the interface's ratios normalized to sum to 1
// across the candidate set; signal strength is the received power mapped
// affinely from [sensitivity, tx_power] onto [0, 1] and divided by the
// calibration signal anchor; power consumption is the calibration
// consumption anchor divided by the interface's consumption. Both
// dynamic entries are clamped to the calibration benefit cap, so each
// interface's entries depend only on its own link and profile.
scoring::ParameterVector rank_inputs_at_distance(
    const InterfaceProfile& iface, const std::vector<InterfaceProfile>& candidates,
    const DecisionContext& ctx, const power::CalibrationConstants& calib);

// Scores every reachable candidate with the chosen scorer and returns the
// per-interface diagnostics, unsorted. Reachability uses each
// technology's own distance (BS distance for UMTS, AP distance for WLAN)
// and the optional coverage radius.
std::vector<InterfaceAssessment> assess_interfaces(
    const std::vector<InterfaceProfile>& profiles, const DecisionContext& ctx, Scorer scorer,
    const scoring::ScalingFactors& scaling, const power::CalibrationConstants& calib);

// Sorts (id, weight) pairs descending by weight, ascending by id on ties.
Ranking make_ranking(std::vector<std::pair<std::string, double>> weights);

Ranking rank_interfaces(const std::vector<InterfaceProfile>& profiles,
                        const DecisionContext& ctx, Scorer scorer,
                        const scoring::ScalingFactors& scaling,
                        const power::CalibrationConstants& calib);

// Walks ranks 1..N-1 and returns the first admitted interface; rank N is
// never tried, so a single-candidate ranking yields nullopt. Absence is a
// valid outcome, not an error.
std::optional<std::string> select_with_admission(const Ranking& ranking,
                                                 const std::map<std::string, bool>& admission);

// One deterministic admission-control transition. From UMTS or unattached
// the node tries WLAN iff it is available and (distance > threshold or
// battery > threshold), else attaches UMTS. Once on WLAN it leaves only
// when battery < threshold and distance < threshold (or WLAN disappears).
// All comparisons are strict, so exact-threshold inputs keep the current
// attachment.
CacState cac_step(const CacState& state, const DecisionContext& ctx, bool wlan_available);

}  // namespace ifsel::decision
