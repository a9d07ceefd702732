#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>

namespace ifsel::scoring {

// The seven selection parameters an interface is judged on.
enum class Parameter {
  SignalStrength,
  Throughput,
  PowerConsumption,
  Cost,
  CellCoverage,
  QosQoe,
  Security,
};

inline constexpr std::array<Parameter, 7> kAllParameters = {
    Parameter::SignalStrength, Parameter::Throughput, Parameter::PowerConsumption,
    Parameter::Cost,           Parameter::CellCoverage, Parameter::QosQoe,
    Parameter::Security,
};

// The five parameters configured as static merit ratios; signal strength
// and power consumption are always derived from distance.
inline constexpr std::array<Parameter, 5> kStaticParameters = {
    Parameter::Cost, Parameter::Throughput, Parameter::QosQoe, Parameter::CellCoverage,
    Parameter::Security,
};

std::string_view to_string(Parameter p);
std::optional<Parameter> parameter_from_string(std::string_view name);

// Per-parameter importance weights S_m; non-negative, summing to 1
// within 1e-9.
struct ScalingFactors {
  std::map<Parameter, double> values;

  void validate() const;
};

// Scaled per-parameter merit values w_m for one interface. Benefit
// orientation: larger is better. Values are non-negative and finite but
// not capped at 1 (dynamic entries are anchored, not cross-normalized).
struct ParameterVector {
  std::map<Parameter, double> values;

  void validate() const;
};

// Availability indicator R_i per interface: exactly 0 or 1.
struct AvailabilityMask {
  std::map<std::string, int> available;

  void validate() const;
};

// Splits the parameter set into a high-priority and a low-priority group,
// each combined with its own coefficient. With both coefficients at 1
// this reduces to the proposed weight's numerator.
struct PriorityGrouping {
  std::set<Parameter> high;
  std::set<Parameter> low;
  double combine_high = 1.0;
  double combine_low = 1.0;

  void validate() const;  // groups must be disjoint
};

// Normalizes per-parameter ratio numbers so each parameter's scaled
// values sum to 1 across interfaces. Every parameter must carry one
// positive ratio per interface, over the same interface set.
std::map<std::string, ParameterVector> scale_weight_ratios(
    const std::map<Parameter, std::map<std::string, double>>& ratios);

// Simple additive weighting: mask * sum(W_j * r_j) / sum(W_j).
double saw_score(int mask, std::span<const double> weights, std::span<const double> scaled);

// Weighted product: mask * prod(r_j ^ w_j). A zero merit with a positive
// exponent yields 0 (documented, not an error); negative merit is a
// domain error.
double wp_score(int mask, std::span<const double> weights, std::span<const double> scaled);

// Three-criterion cost-function score: w_s*f_s + w_p*f_p + w_c*f_c.
double score_function(double w_signal, double w_power, double w_cost, double f_signal,
                      double f_power, double f_cost);

// The battery-aware weight: sum(w_m * S_m) / log10(1 + lp). lp must be
// >= 1 so the divisor stays positive; params must cover every parameter
// named in scaling.
double proposed_weight(const ParameterVector& params, const ScalingFactors& scaling, double lp);

// Priority-grouped partial weight:
// combine_high * sum_high(w_m * S_m) + combine_low * sum_low(w_m * S_m).
// Every parameter in scaling must fall in exactly one group.
double grouped_weight(const ParameterVector& params, const ScalingFactors& scaling,
                      const PriorityGrouping& grouping);

}  // namespace ifsel::scoring
