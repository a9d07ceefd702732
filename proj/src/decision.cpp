#include "ifsel/decision.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ifsel/errors.hpp"

namespace ifsel::decision {

std::string_view to_string(Technology t) {
  return t == Technology::Umts ? "UMTS" : "WLAN";
}

std::string_view to_string(Scorer s) {
  switch (s) {
    case Scorer::Saw: return "saw";
    case Scorer::WeightedProduct: return "wp";
    case Scorer::ScoreFunction: return "sf";
    case Scorer::Proposed: return "proposed";
  }
  return "?";
}

std::optional<Scorer> scorer_from_string(std::string_view name) {
  for (Scorer s : {Scorer::Saw, Scorer::WeightedProduct, Scorer::ScoreFunction, Scorer::Proposed})
    if (to_string(s) == name) return s;
  return std::nullopt;
}

std::string_view to_string(Attachment a) {
  switch (a) {
    case Attachment::None: return "none";
    case Attachment::Umts: return "UMTS";
    case Attachment::Wlan: return "WLAN";
  }
  return "?";
}

void InterfaceProfile::validate() const {
  if (id.empty()) throw ValidationError("interface: id must be non-empty");
  link.validate();
  path_model.validate();
  power_profile.validate();
  if (static_ratios.size() != scoring::kStaticParameters.size())
    throw ValidationError("interface " + id + ": exactly the five static parameters (" +
                          "cost, throughput, qos_qoe, cell_coverage, security) must be given");
  for (scoring::Parameter p : scoring::kStaticParameters) {
    auto it = static_ratios.find(p);
    if (it == static_ratios.end())
      throw ValidationError("interface " + id + ": missing static ratio " +
                            std::string(scoring::to_string(p)));
    if (!(it->second > 0.0) || !std::isfinite(it->second))
      throw ValidationError("interface " + id + ": static ratio " +
                            std::string(scoring::to_string(p)) + " must be > 0");
  }
  if (coverage_m && !(*coverage_m > 0.0))
    throw ValidationError("interface " + id + ": coverage_m must be > 0");

  // each technology carries its canonical communication states
  const std::vector<std::string> expected =
      technology == Technology::Wlan
          ? std::vector<std::string>{"transmit", "receive", "idle", "sleep"}
          : std::vector<std::string>{"transmit", "receive", "signaling", "power_saving"};
  if (power_profile.state_powers_mw.size() != expected.size())
    throw ValidationError("interface " + id + ": power profile must have exactly " +
                          std::to_string(expected.size()) + " states");
  for (const auto& name : expected)
    if (power_profile.find_state(name) < 0)
      throw ValidationError("interface " + id + ": power profile lacks state '" + name + "'");
}

void PolicyConfig::validate() const {
  if (!(battery_threshold > 0.0 && battery_threshold < 1.0))
    throw ValidationError("policy: battery_threshold must lie in (0, 1)");
  if (!(distance_threshold_m > 0.0))
    throw ValidationError("policy: distance_threshold_m must be > 0");
}

void CacState::validate() const {
  if (!(distance_threshold_m > 0.0))
    throw ValidationError("cac state: distance_threshold_m must be > 0");
  if (!(battery_threshold > 0.0))
    throw ValidationError("cac state: battery_threshold must be > 0");
}

void DecisionContext::validate() const {
  battery.validate();
  policy.validate();
  if (!(distance_to_bs_m > 0.0))
    throw ValidationError("context: distance_to_bs_m must be > 0");
  if (!(distance_to_ap_m > 0.0))
    throw ValidationError("context: distance_to_ap_m must be > 0");
}

namespace {

double own_distance_m(const InterfaceProfile& iface, const DecisionContext& ctx) {
  return iface.technology == Technology::Umts ? ctx.distance_to_bs_m : ctx.distance_to_ap_m;
}

bool candidate_available(const InterfaceProfile& iface, const DecisionContext& ctx) {
  const double d = own_distance_m(iface, ctx);
  if (iface.coverage_m && d > *iface.coverage_m) return false;
  const double loss = radio::path_loss_db(iface.path_model, d / 1000.0);
  const double rx = radio::received_power_dbm(iface.link, loss);
  return radio::is_reachable(rx, iface.link.rx_sensitivity_dbm);
}

}  // namespace

scoring::ParameterVector rank_inputs_at_distance(const InterfaceProfile& iface,
                                                 const std::vector<InterfaceProfile>& candidates,
                                                 const DecisionContext& ctx,
                                                 const power::CalibrationConstants& calib) {
  scoring::ParameterVector out;

  for (scoring::Parameter p : scoring::kStaticParameters) {
    double sum = 0.0;
    for (const auto& c : candidates) sum += c.static_ratios.at(p);
    out.values[p] = iface.static_ratios.at(p) / sum;
  }

  const double d = own_distance_m(iface, ctx);
  const double loss = radio::path_loss_db(iface.path_model, d / 1000.0);
  const double rx = radio::received_power_dbm(iface.link, loss);
  if (!radio::is_reachable(rx, iface.link.rx_sensitivity_dbm))
    throw std::logic_error("rank_inputs_at_distance: interface " + iface.id +
                           " is unreachable; filter candidates first");
  const double span = iface.link.tx_power_dbm - iface.link.rx_sensitivity_dbm;
  const double affine = (rx - iface.link.rx_sensitivity_dbm) / span;
  out.values[scoring::Parameter::SignalStrength] =
      std::min(affine / calib.signal_anchor, calib.benefit_cap);

  const double consumption = power::interface_consumption(iface, ctx.distance_to_bs_m, calib);
  out.values[scoring::Parameter::PowerConsumption] =
      std::min(calib.consumption_anchor_mws / consumption, calib.benefit_cap);

  return out;
}

std::vector<InterfaceAssessment> assess_interfaces(const std::vector<InterfaceProfile>& profiles,
                                                   const DecisionContext& ctx, Scorer scorer,
                                                   const scoring::ScalingFactors& scaling,
                                                   const power::CalibrationConstants& calib) {
  ctx.validate();
  std::vector<InterfaceProfile> candidates;
  for (const auto& p : profiles)
    if (candidate_available(p, ctx)) candidates.push_back(p);
  if (candidates.empty())
    throw NoCandidateError("no reachable interface at BS distance " +
                           std::to_string(ctx.distance_to_bs_m) + " m");

  const power::PowerRankAssignment ranks =
      power::power_rank(candidates, ctx.distance_to_bs_m, calib);
  scoring::AvailabilityMask mask;
  for (const auto& c : candidates) mask.available[c.id] = 1;

  std::vector<InterfaceAssessment> out;
  out.reserve(candidates.size());
  for (const auto& c : candidates) {
    InterfaceAssessment a;
    a.id = c.id;
    a.params = rank_inputs_at_distance(c, candidates, ctx, calib);
    a.consumption_mws = power::interface_consumption(c, ctx.distance_to_bs_m, calib);
    a.power_rank = ranks.ranks.at(c.id);
    a.lp = power::battery_level_factor(ctx.battery, a.power_rank);

    const int r = mask.available.at(c.id);
    switch (scorer) {
      case Scorer::Proposed:
        a.weight = r * scoring::proposed_weight(a.params, scaling, a.lp);
        break;
      case Scorer::Saw:
      case Scorer::WeightedProduct: {
        std::vector<double> w, m;
        for (const auto& [p, s] : scaling.values) {
          w.push_back(s);
          auto it = a.params.values.find(p);
          if (it == a.params.values.end())
            throw std::invalid_argument("assess_interfaces: missing parameter " +
                                        std::string(scoring::to_string(p)));
          m.push_back(it->second);
        }
        a.weight = scorer == Scorer::Saw ? scoring::saw_score(r, w, m)
                                         : scoring::wp_score(r, w, m);
        break;
      }
      case Scorer::ScoreFunction: {
        auto factor = [&](scoring::Parameter p) {
          auto it = scaling.values.find(p);
          return it == scaling.values.end() ? 0.0 : it->second;
        };
        a.weight = r * scoring::score_function(
                           factor(scoring::Parameter::SignalStrength),
                           factor(scoring::Parameter::PowerConsumption),
                           factor(scoring::Parameter::Cost),
                           a.params.values.at(scoring::Parameter::SignalStrength),
                           a.params.values.at(scoring::Parameter::PowerConsumption),
                           a.params.values.at(scoring::Parameter::Cost));
        break;
      }
    }
    out.push_back(std::move(a));
  }
  return out;
}

Ranking make_ranking(std::vector<std::pair<std::string, double>> weights) {
  std::sort(weights.begin(), weights.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return Ranking{std::move(weights)};
}

Ranking rank_interfaces(const std::vector<InterfaceProfile>& profiles, const DecisionContext& ctx,
                        Scorer scorer, const scoring::ScalingFactors& scaling,
                        const power::CalibrationConstants& calib) {
  std::vector<std::pair<std::string, double>> weights;
  for (const auto& a : assess_interfaces(profiles, ctx, scorer, scaling, calib))
    weights.emplace_back(a.id, a.weight);
  return make_ranking(std::move(weights));
}

std::optional<std::string> select_with_admission(const Ranking& ranking,
                                                 const std::map<std::string, bool>& admission) {
  if (ranking.ordered.empty())
    throw std::invalid_argument("select_with_admission: ranking must be non-empty");
  // ranks 1..N-1 only; the worst-ranked interface is never tried
  for (std::size_t i = 0; i + 1 < ranking.ordered.size(); ++i) {
    const auto it = admission.find(ranking.ordered[i].first);
    if (it != admission.end() && it->second) return ranking.ordered[i].first;
  }
  return std::nullopt;
}

CacState cac_step(const CacState& state, const DecisionContext& ctx, bool wlan_available) {
  if (!(ctx.distance_to_bs_m > 0.0))
    throw std::domain_error("cac_step: distance_to_bs_m must be > 0");
  const bool battery_high = ctx.battery.level > state.battery_threshold;
  const bool battery_low = ctx.battery.level < state.battery_threshold;
  const bool far = ctx.distance_to_bs_m > state.distance_threshold_m;
  const bool near = ctx.distance_to_bs_m < state.distance_threshold_m;

  CacState next = state;
  if (state.attached == Attachment::Wlan) {
    if (!wlan_available || (battery_low && near))
      next.attached = Attachment::Umts;
  } else {
    next.attached = (wlan_available && (far || battery_high)) ? Attachment::Wlan
                                                              : Attachment::Umts;
  }
  return next;
}

}  // namespace ifsel::decision
