#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ifsel/config.hpp"
#include "ifsel/decision.hpp"

namespace ifsel::sim {

enum class BatteryMode { Sufficient, Insufficient };

// Representative battery levels for the two sweep modes. Any level on the
// same side of the threshold ranks identically, so one representative per
// side suffices.
double sufficient_level(double threshold);    // threshold + 0.5 * (1 - threshold)
double insufficient_level(double threshold);  // 0.5 * threshold

struct SweepSpec {
  double d_min_m = 100.0;
  double d_max_m = 2000.0;
  double step_m = 10.0;
  BatteryMode battery_mode = BatteryMode::Sufficient;
  decision::Scorer scorer = decision::Scorer::Proposed;

  void validate() const;  // 0 < d_min < d_max, step > 0
};

// One grid row: weights and consumptions in the config interface order.
// An interface unavailable at this distance reports weight 0 (its
// availability mask zeroes the score); consumption is always evaluated.
struct SweepRow {
  double distance_m = 0.0;
  std::vector<double> weights;
  std::vector<double> consumptions_mws;
  std::string chosen;
};

struct SweepResult {
  std::vector<std::string> interface_ids;
  std::vector<SweepRow> rows;
};

struct TraceSample {
  double time_s = 0.0;
  double distance_to_bs_m = 0.0;
  double battery_level = 1.0;
  bool wlan_available = true;
};

struct MobilityTrace {
  std::vector<TraceSample> samples;

  void validate() const;  // non-empty, times strictly increasing, distances > 0
};

struct TraceRow {
  double time_s = 0.0;
  decision::CacState state;
  decision::Ranking ranking;
  std::optional<std::string> selected;
  bool handover = false;  // attachment changed (initial attach excluded)
};

// Evaluates the ranking at every grid distance. Rows are independent pure
// functions of (distance, config); sweep() computes them in parallel
// (OpenMP when available) and sweep_serial() is the reference kernel kept
// for testing. Both produce identical results, row order preserved.
SweepResult sweep(const SweepSpec& spec, const config::ConfigFile& cfg);
SweepResult sweep_serial(const SweepSpec& spec, const config::ConfigFile& cfg);

enum class Series { Weight, Consumption };

// Distance where series (id_a - id_b) first changes sign, linearly
// interpolated between grid points; an exact zero returns that grid
// distance. nullopt when the series never cross. Unknown ids raise
// std::invalid_argument.
std::optional<double> find_crossover(const SweepResult& result, Series series,
                                     const std::string& id_a, const std::string& id_b);

// Folds cac_step over the trace from an unattached start, recording the
// post-transition state, the ranking over the currently available
// interfaces, and the admitted selection at each sample.
std::vector<TraceRow> run_trace(const MobilityTrace& trace, const config::ConfigFile& cfg);

}  // namespace ifsel::sim
