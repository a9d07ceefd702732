#include "ifsel/scoring.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ifsel/errors.hpp"

namespace ifsel::scoring {

namespace {
constexpr double kSumTolerance = 1e-9;
}

std::string_view to_string(Parameter p) {
  switch (p) {
    case Parameter::SignalStrength: return "signal_strength";
    case Parameter::Throughput: return "throughput";
    case Parameter::PowerConsumption: return "power_consumption";
    case Parameter::Cost: return "cost";
    case Parameter::CellCoverage: return "cell_coverage";
    case Parameter::QosQoe: return "qos_qoe";
    case Parameter::Security: return "security";
  }
  return "?";
}

std::optional<Parameter> parameter_from_string(std::string_view name) {
  for (Parameter p : kAllParameters)
    if (to_string(p) == name) return p;
  return std::nullopt;
}

void ScalingFactors::validate() const {
  if (values.empty()) throw ValidationError("scaling factors: at least one parameter required");
  double sum = 0.0;
  for (const auto& [p, s] : values) {
    if (!(s >= 0.0) || !std::isfinite(s)) {
      std::ostringstream os;
      os << "scaling factors: " << to_string(p) << " must be a finite value >= 0";
      throw ValidationError(os.str());
    }
    sum += s;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    std::ostringstream os;
    os << "scaling factors: values must sum to 1 (got " << sum << ")";
    throw ValidationError(os.str());
  }
}

void ParameterVector::validate() const {
  for (const auto& [p, w] : values) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      std::ostringstream os;
      os << "parameter vector: " << to_string(p) << " must be a finite value >= 0";
      throw ValidationError(os.str());
    }
  }
}

void AvailabilityMask::validate() const {
  for (const auto& [id, r] : available)
    if (r != 0 && r != 1)
      throw ValidationError("availability mask: entries must be exactly 0 or 1 (" + id + ")");
}

void PriorityGrouping::validate() const {
  for (Parameter p : high)
    if (low.count(p))
      throw ValidationError(std::string("priority grouping: ") + std::string(to_string(p)) +
                            " appears in both groups");
}

std::map<std::string, ParameterVector> scale_weight_ratios(
    const std::map<Parameter, std::map<std::string, double>>& ratios) {
  std::map<std::string, ParameterVector> out;
  for (const auto& [param, per_iface] : ratios) {
    if (per_iface.empty())
      throw ValidationError(std::string("weight ratios: ") + std::string(to_string(param)) +
                            " has no interfaces");
    double sum = 0.0;
    for (const auto& [id, ratio] : per_iface) {
      if (!(ratio > 0.0) || !std::isfinite(ratio)) {
        std::ostringstream os;
        os << "weight ratios: " << to_string(param) << " for " << id
           << " must be a finite value > 0";
        throw ValidationError(os.str());
      }
      sum += ratio;
    }
    for (const auto& [id, ratio] : per_iface) out[id].values[param] = ratio / sum;
  }
  // every parameter must cover the same interface set
  for (const auto& [id, vec] : out)
    if (vec.values.size() != ratios.size())
      throw ValidationError("weight ratios: interface " + id +
                            " is missing from some parameter rows");
  return out;
}

namespace {

void check_mask(int mask) {
  if (mask != 0 && mask != 1)
    throw std::invalid_argument("score: availability mask must be 0 or 1");
}

void check_lengths(std::span<const double> weights, std::span<const double> scaled) {
  if (weights.size() != scaled.size())
    throw std::invalid_argument("score: weight and merit lists differ in length");
  if (weights.empty()) throw std::invalid_argument("score: empty criteria lists");
}

}  // namespace

double saw_score(int mask, std::span<const double> weights, std::span<const double> scaled) {
  check_mask(mask);
  check_lengths(weights, scaled);
  double weight_sum = 0.0, acc = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    weight_sum += weights[j];
    acc += weights[j] * scaled[j];
  }
  if (!(weight_sum > 0.0)) throw std::domain_error("saw_score: weights must sum to > 0");
  return mask * acc / weight_sum;
}

double wp_score(int mask, std::span<const double> weights, std::span<const double> scaled) {
  check_mask(mask);
  check_lengths(weights, scaled);
  double prod = 1.0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (scaled[j] < 0.0) throw std::domain_error("wp_score: merit values must be >= 0");
    if (scaled[j] == 0.0 && weights[j] > 0.0) return 0.0;
    prod *= std::pow(scaled[j], weights[j]);
  }
  return mask * prod;
}

double score_function(double w_signal, double w_power, double w_cost, double f_signal,
                      double f_power, double f_cost) {
  for (double v : {w_signal, w_power, w_cost, f_signal, f_power, f_cost})
    if (!std::isfinite(v)) throw std::invalid_argument("score_function: inputs must be finite");
  if (w_signal < 0.0 || w_power < 0.0 || w_cost < 0.0)
    throw std::domain_error("score_function: weights must be >= 0");
  return w_signal * f_signal + w_power * f_power + w_cost * f_cost;
}

namespace {

double weighted_merit(const ParameterVector& params, Parameter p, double factor) {
  auto it = params.values.find(p);
  if (it == params.values.end())
    throw std::invalid_argument(std::string("score: parameter vector lacks ") +
                                std::string(to_string(p)));
  return it->second * factor;
}

}  // namespace

double proposed_weight(const ParameterVector& params, const ScalingFactors& scaling, double lp) {
  if (!(lp >= 1.0)) throw std::domain_error("proposed_weight: lp must be >= 1");
  double numerator = 0.0;
  for (const auto& [p, s] : scaling.values) numerator += weighted_merit(params, p, s);
  return numerator / std::log10(1.0 + lp);
}

double grouped_weight(const ParameterVector& params, const ScalingFactors& scaling,
                      const PriorityGrouping& grouping) {
  grouping.validate();
  double high_sum = 0.0, low_sum = 0.0;
  for (const auto& [p, s] : scaling.values) {
    if (grouping.high.count(p))
      high_sum += weighted_merit(params, p, s);
    else if (grouping.low.count(p))
      low_sum += weighted_merit(params, p, s);
    else
      throw std::invalid_argument(std::string("grouped_weight: ") + std::string(to_string(p)) +
                                  " is in neither priority group");
  }
  return grouping.combine_high * high_sum + grouping.combine_low * low_sum;
}

}  // namespace ifsel::scoring
