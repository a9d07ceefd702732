#include "ifsel/sim.hpp"

#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>

#include "ifsel/errors.hpp"

namespace ifsel::sim {

double sufficient_level(double threshold) { return threshold + 0.5 * (1.0 - threshold); }
double insufficient_level(double threshold) { return 0.5 * threshold; }

void SweepSpec::validate() const {
  if (!(d_min_m > 0.0)) throw ValidationError("sweep: d_min_m must be > 0");
  if (!(d_min_m < d_max_m)) throw ValidationError("sweep: d_min_m must be < d_max_m");
  if (!(step_m > 0.0)) throw ValidationError("sweep: step_m must be > 0");
}

void MobilityTrace::validate() const {
  if (samples.empty()) throw ValidationError("trace: contains no samples");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    if (!(s.distance_to_bs_m > 0.0))
      throw ValidationError("trace: sample " + std::to_string(i) + " has distance <= 0");
    if (!(s.battery_level >= 0.0 && s.battery_level <= 1.0))
      throw ValidationError("trace: sample " + std::to_string(i) +
                            " has battery level outside [0, 1]");
    if (i > 0 && !(s.time_s > samples[i - 1].time_s))
      throw ValidationError("trace: times must be strictly increasing (sample " +
                            std::to_string(i) + ")");
  }
}

namespace {

std::vector<double> grid_distances(const SweepSpec& spec) {
  const auto count = static_cast<std::size_t>(
      std::floor((spec.d_max_m - spec.d_min_m) / spec.step_m + 1e-9));
  std::vector<double> out(count + 1);
  for (std::size_t i = 0; i <= count; ++i)
    out[i] = spec.d_min_m + static_cast<double>(i) * spec.step_m;
  return out;
}

decision::DecisionContext context_at(double distance_m, const SweepSpec& spec,
                                     const config::ConfigFile& cfg) {
  decision::DecisionContext ctx;
  ctx.battery.threshold = cfg.policy.battery_threshold;
  ctx.battery.level = spec.battery_mode == BatteryMode::Sufficient
                          ? sufficient_level(cfg.policy.battery_threshold)
                          : insufficient_level(cfg.policy.battery_threshold);
  ctx.distance_to_bs_m = distance_m;
  ctx.distance_to_ap_m = cfg.distance_to_ap_m;
  ctx.policy = cfg.policy;
  for (const auto& iface : cfg.interfaces) ctx.admission[iface.id] = true;
  return ctx;
}

SweepRow evaluate_row(double distance_m, const SweepSpec& spec, const config::ConfigFile& cfg) {
  const decision::DecisionContext ctx = context_at(distance_m, spec, cfg);
  const auto assessments =
      decision::assess_interfaces(cfg.interfaces, ctx, spec.scorer, cfg.scaling_factors,
                                  cfg.calibration);

  SweepRow row;
  row.distance_m = distance_m;
  row.weights.reserve(cfg.interfaces.size());
  row.consumptions_mws.reserve(cfg.interfaces.size());
  std::vector<std::pair<std::string, double>> weights;
  for (const auto& iface : cfg.interfaces) {
    double weight = 0.0;  // masked out when unavailable at this distance
    const decision::InterfaceAssessment* assessed = nullptr;
    for (const auto& a : assessments)
      if (a.id == iface.id) assessed = &a;
    if (assessed) weight = assessed->weight;
    row.weights.push_back(weight);
    row.consumptions_mws.push_back(
        assessed ? assessed->consumption_mws
                 : power::interface_consumption(iface, distance_m, cfg.calibration));
  }
  for (const auto& a : assessments) weights.emplace_back(a.id, a.weight);
  row.chosen = decision::make_ranking(std::move(weights)).ordered.front().first;
  return row;
}

}  // namespace

SweepResult sweep_serial(const SweepSpec& spec, const config::ConfigFile& cfg) {
  spec.validate();
  const std::vector<double> distances = grid_distances(spec);
  SweepResult out;
  for (const auto& iface : cfg.interfaces) out.interface_ids.push_back(iface.id);
  out.rows.resize(distances.size());
  for (std::size_t i = 0; i < distances.size(); ++i)
    out.rows[i] = evaluate_row(distances[i], spec, cfg);
  return out;
}

SweepResult sweep(const SweepSpec& spec, const config::ConfigFile& cfg) {
  spec.validate();
  const std::vector<double> distances = grid_distances(spec);
  SweepResult out;
  for (const auto& iface : cfg.interfaces) out.interface_ids.push_back(iface.id);
  out.rows.resize(distances.size());

  std::exception_ptr error;
  std::atomic<bool> failed{false};
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(distances.size()); ++i) {
    if (failed.load(std::memory_order_relaxed)) continue;
    try {
      out.rows[static_cast<std::size_t>(i)] =
          evaluate_row(distances[static_cast<std::size_t>(i)], spec, cfg);
    } catch (...) {
#pragma omp critical(ifsel_sweep_error)
      {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

std::optional<double> find_crossover(const SweepResult& result, Series series,
                                     const std::string& id_a, const std::string& id_b) {
  auto column = [&](const std::string& id) {
    for (std::size_t i = 0; i < result.interface_ids.size(); ++i)
      if (result.interface_ids[i] == id) return i;
    throw std::invalid_argument("find_crossover: unknown series '" + id + "'");
  };
  const std::size_t a = column(id_a), b = column(id_b);

  auto value = [&](const SweepRow& row, std::size_t col) {
    return series == Series::Weight ? row.weights[col] : row.consumptions_mws[col];
  };

  std::vector<double> diff(result.rows.size());
  bool any_nonzero = false;
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    diff[i] = value(result.rows[i], a) - value(result.rows[i], b);
    if (diff[i] != 0.0) any_nonzero = true;
  }
  if (!any_nonzero) return std::nullopt;

  for (std::size_t i = 0; i < diff.size(); ++i) {
    if (diff[i] == 0.0) return result.rows[i].distance_m;
    if (i + 1 < diff.size() && (diff[i] > 0.0) != (diff[i + 1] > 0.0)) {
      const double d0 = result.rows[i].distance_m;
      const double d1 = result.rows[i + 1].distance_m;
      return d0 + (d1 - d0) * diff[i] / (diff[i] - diff[i + 1]);
    }
  }
  return std::nullopt;
}

std::vector<TraceRow> run_trace(const MobilityTrace& trace, const config::ConfigFile& cfg) {
  trace.validate();
  decision::CacState state{decision::Attachment::None, cfg.policy.distance_threshold_m,
                           cfg.policy.battery_threshold};
  std::vector<TraceRow> out;
  out.reserve(trace.samples.size());
  for (const auto& sample : trace.samples) {
    decision::DecisionContext ctx;
    ctx.battery = {sample.battery_level, cfg.policy.battery_threshold};
    ctx.distance_to_bs_m = sample.distance_to_bs_m;
    ctx.distance_to_ap_m = cfg.distance_to_ap_m;
    ctx.policy = cfg.policy;

    std::vector<decision::InterfaceProfile> candidates;
    for (const auto& iface : cfg.interfaces) {
      if (iface.technology == decision::Technology::Wlan && !sample.wlan_available) continue;
      candidates.push_back(iface);
      ctx.admission[iface.id] = true;
    }

    const decision::Attachment previous = state.attached;
    state = decision::cac_step(state, ctx, sample.wlan_available);

    TraceRow row;
    row.time_s = sample.time_s;
    row.state = state;
    if (!candidates.empty()) {
      row.ranking = decision::rank_interfaces(candidates, ctx, cfg.policy.scorer,
                                              cfg.scaling_factors, cfg.calibration);
      row.selected = decision::select_with_admission(row.ranking, ctx.admission);
    }
    row.handover = previous != decision::Attachment::None && state.attached != previous;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace ifsel::sim
