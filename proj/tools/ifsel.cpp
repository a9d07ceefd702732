#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ifsel/csv.hpp"
#include "ifsel/errors.hpp"
#include "ifsel/sim.hpp"

namespace {

using namespace ifsel;

// usage problems exit with 2; validation/runtime failures with 1
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

struct GlobalOptions {
  std::string config_path;
  std::string output_path;
  std::string format = "pretty";
};

config::ConfigFile load_config(const GlobalOptions& opts) {
  config::ConfigFile cfg =
      opts.config_path.empty() ? config::default_config() : config::load_file(opts.config_path);
  cfg.validate();
  for (const auto& warning : config::collect_warnings(cfg))
    std::cerr << "warning: " << warning << "\n";
  return cfg;
}

void write_artifact(const GlobalOptions& opts, const std::string& text, std::ostream& summary,
                    std::ostream*& summary_out) {
  if (!opts.output_path.empty()) {
    std::ofstream out(opts.output_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + opts.output_path + "'");
    out << text;
    summary_out = &summary;
  } else {
    std::cout << text;
    summary_out = &std::cerr;  // keep stdout clean for the CSV
  }
}

decision::Scorer resolve_scorer(const std::string& flag, const config::ConfigFile& cfg) {
  if (flag.empty()) return cfg.policy.scorer;
  auto s = decision::scorer_from_string(flag);
  if (!s) throw UsageError("unknown scorer '" + flag + "' (use saw, wp, sf or proposed)");
  return *s;
}

void print_crossover(std::ostream& os, const char* label, std::optional<double> crossover) {
  os << label;
  if (crossover)
    os << csv::format_number(*crossover) << " m\n";
  else
    os << "none\n";
}

int cmd_sweep(const GlobalOptions& opts, const config::ConfigFile& cfg, double d_min,
              double d_max, double step, const std::string& mode,
              const std::string& scorer_flag) {
  if (!(d_min > 0.0)) throw UsageError("--d-min must be > 0");
  if (!(d_min < d_max)) throw UsageError("--d-min must be less than --d-max");
  if (!(step > 0.0)) throw UsageError("--step must be > 0");
  sim::SweepSpec spec;
  spec.d_min_m = d_min;
  spec.d_max_m = d_max;
  spec.step_m = step;
  if (mode == "sufficient")
    spec.battery_mode = sim::BatteryMode::Sufficient;
  else if (mode == "insufficient")
    spec.battery_mode = sim::BatteryMode::Insufficient;
  else
    throw UsageError("--mode must be 'sufficient' or 'insufficient'");
  spec.scorer = resolve_scorer(scorer_flag, cfg);

  const sim::SweepResult result = sim::sweep(spec, cfg);

  std::ostream* summary = &std::cout;
  write_artifact(opts, csv::sweep_csv(result), std::cout, summary);

  *summary << "rows: " << result.rows.size() << "\n";
  if (result.interface_ids.size() == 2) {
    const std::string& a = result.interface_ids[0];
    const std::string& b = result.interface_ids[1];
    std::ostringstream consumption_label, weight_label;
    consumption_label << "consumption crossover (" << a << " vs " << b << "): ";
    weight_label << "weight crossover (" << a << " vs " << b << "): ";
    print_crossover(*summary, consumption_label.str().c_str(),
                    sim::find_crossover(result, sim::Series::Consumption, a, b));
    print_crossover(*summary, weight_label.str().c_str(),
                    sim::find_crossover(result, sim::Series::Weight, a, b));
  }

  bool uniform = true;
  for (const auto& row : result.rows) uniform = uniform && row.chosen == result.rows[0].chosen;
  if (uniform) {
    *summary << "chosen: " << result.rows[0].chosen << " at all " << result.rows.size()
             << " grid points\n";
  } else {
    std::size_t flips = 0;
    for (std::size_t i = 1; i < result.rows.size(); ++i)
      if (result.rows[i].chosen != result.rows[i - 1].chosen) ++flips;
    *summary << "chosen: " << result.rows.front().chosen << " first, "
             << result.rows.back().chosen << " last (" << flips << " flip"
             << (flips == 1 ? "" : "s") << ")\n";
  }
  return 0;
}

int cmd_decide(const GlobalOptions& opts, const config::ConfigFile& cfg, double distance,
               double battery, double distance_to_ap, const std::string& scorer_flag) {
  if (!(distance > 0.0)) throw UsageError("--distance must be > 0");
  if (!(battery >= 0.0 && battery <= 1.0)) throw UsageError("--battery must lie in [0, 1]");
  if (!(distance_to_ap > 0.0)) throw UsageError("--distance-to-ap must be > 0");
  const decision::Scorer scorer = resolve_scorer(scorer_flag, cfg);

  decision::DecisionContext ctx;
  ctx.battery = {battery, cfg.policy.battery_threshold};
  ctx.distance_to_bs_m = distance;
  ctx.distance_to_ap_m = distance_to_ap;
  ctx.policy = cfg.policy;
  for (const auto& iface : cfg.interfaces) ctx.admission[iface.id] = true;

  const auto assessments =
      decision::assess_interfaces(cfg.interfaces, ctx, scorer, cfg.scaling_factors,
                                  cfg.calibration);
  std::vector<std::pair<std::string, double>> weights;
  for (const auto& a : assessments) weights.emplace_back(a.id, a.weight);
  const decision::Ranking ranking = decision::make_ranking(std::move(weights));
  const auto selected = decision::select_with_admission(ranking, ctx.admission);

  auto find_assessment = [&](const std::string& id) -> const decision::InterfaceAssessment& {
    for (const auto& a : assessments)
      if (a.id == id) return a;
    throw std::logic_error("assessment missing for " + id);
  };

  std::ostringstream report;
  if (opts.format == "csv") {
    report << "interface,rank,weight,lp,power_rank,consumption_mws";
    for (auto p : scoring::kAllParameters) report << ",param_" << scoring::to_string(p);
    report << ",selected\n";
    for (std::size_t i = 0; i < ranking.ordered.size(); ++i) {
      const auto& a = find_assessment(ranking.ordered[i].first);
      report << a.id << ',' << (i + 1) << ',' << csv::format_number(a.weight) << ','
             << csv::format_number(a.lp) << ',' << a.power_rank << ','
             << csv::format_number(a.consumption_mws);
      for (auto p : scoring::kAllParameters)
        report << ',' << csv::format_number(a.params.values.at(p));
      report << ',' << (selected && *selected == a.id ? 1 : 0) << '\n';
    }
  } else {
    report << "ranking (scorer " << decision::to_string(scorer) << ", BS distance "
           << csv::format_number(distance) << " m, battery " << csv::format_number(battery)
           << "):\n";
    for (std::size_t i = 0; i < ranking.ordered.size(); ++i) {
      const auto& a = find_assessment(ranking.ordered[i].first);
      report << "  " << (i + 1) << ". " << a.id << "  weight " << csv::format_number(a.weight)
             << "  L_p " << csv::format_number(a.lp) << "  power rank " << a.power_rank
             << "  consumption " << csv::format_number(a.consumption_mws) << " mW*s\n";
      for (auto p : scoring::kAllParameters) {
        const double merit = a.params.values.at(p);
        const double factor = cfg.scaling_factors.values.at(p);
        report << "       " << scoring::to_string(p) << ": " << csv::format_number(merit)
               << " x " << csv::format_number(factor) << " = "
               << csv::format_number(merit * factor) << "\n";
      }
    }
    report << "selected: " << (selected ? *selected : "none") << "\n";
  }

  std::ostream* summary = &std::cout;
  write_artifact(opts, report.str(), std::cout, summary);
  return 0;
}

int cmd_trace(const GlobalOptions& opts, const config::ConfigFile& cfg,
              const std::string& trace_path) {
  std::ifstream in(trace_path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open trace file '" + trace_path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const sim::MobilityTrace trace = csv::parse_trace_csv(buf.str());

  const auto rows = sim::run_trace(trace, cfg);
  std::vector<std::string> ids;
  for (const auto& iface : cfg.interfaces) ids.push_back(iface.id);

  std::ostream* summary = &std::cout;
  write_artifact(opts, csv::trace_csv(rows, ids), std::cout, summary);

  std::size_t handovers = 0;
  for (const auto& row : rows) handovers += row.handover ? 1 : 0;
  *summary << "handovers: " << handovers << "\n";
  return 0;
}

int cmd_calibrate(const GlobalOptions& opts, const config::ConfigFile& cfg, double target) {
  if (!(target > 0.0)) throw UsageError("--target must be > 0");
  const double fitted =
      power::fit_tx_power_ref(cfg.interfaces, cfg.calibration, target);

  power::CalibrationConstants calib = cfg.calibration;
  calib.tx_power_ref_mw = fitted;
  const double achieved = power::consumption_crossover_m(cfg.interfaces, calib);

  nlohmann::json fragment;
  fragment["calibration"] = {{"tx_power_ref_mw", calib.tx_power_ref_mw},
                             {"ref_distance_m", calib.ref_distance_m},
                             {"signal_anchor", calib.signal_anchor},
                             {"consumption_anchor_mws", calib.consumption_anchor_mws},
                             {"benefit_cap", calib.benefit_cap}};

  std::ostream* summary = &std::cout;
  write_artifact(opts, fragment.dump(2) + "\n", std::cout, summary);
  *summary << "consumption crossover with fitted constants: " << csv::format_number(achieved)
           << " m\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ifsel: battery-aware interface selection for a UMTS/WLAN overlay.\n"
      "Sweep CSV columns: distance_m, weight_<id>..., consumption_<id>..., chosen\n"
      "Trace CSV columns: time_s, attached, selected, handover, weight_<id>...\n"
      "Interface columns follow the config order; numbers use 6 significant digits."};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOptions opts;
  app.add_option("--config", opts.config_path, "config file (JSON, comments allowed)");
  app.add_option("--output", opts.output_path, "write the CSV/report here instead of stdout");
  app.add_option("--format", opts.format, "decide report format")
      ->check(CLI::IsMember({"csv", "pretty"}));

  auto* sweep_cmd = app.add_subcommand("sweep", "rank interfaces over a BS-distance grid");
  double d_min = 100.0, d_max = 2000.0, step = 10.0;
  std::string mode = "sufficient", sweep_scorer;
  sweep_cmd->add_option("--d-min", d_min, "grid start, meters");
  sweep_cmd->add_option("--d-max", d_max, "grid end, meters");
  sweep_cmd->add_option("--step", step, "grid step, meters");
  sweep_cmd->add_option("--mode", mode, "battery mode: sufficient | insufficient");
  sweep_cmd->add_option("--scorer", sweep_scorer, "saw | wp | sf | proposed");

  auto* decide_cmd = app.add_subcommand("decide", "single ranking and admission decision");
  double distance = 0.0, battery = -1.0, distance_to_ap = 0.0;
  std::string decide_scorer;
  decide_cmd->add_option("--distance", distance, "MN-BS distance, meters")->required();
  decide_cmd->add_option("--battery", battery, "battery level in [0, 1]")->required();
  decide_cmd->add_option("--distance-to-ap", distance_to_ap, "MN-AP distance, meters");
  decide_cmd->add_option("--scorer", decide_scorer, "saw | wp | sf | proposed");

  auto* trace_cmd = app.add_subcommand("trace", "drive the admission control over a trace");
  std::string trace_path;
  trace_cmd->add_option("--trace-file", trace_path,
                        "CSV: time,distance,battery,wlan_available")
      ->required();

  auto* calibrate_cmd =
      app.add_subcommand("calibrate", "fit the reference transmit power to a crossover");
  double target = 0.0;
  calibrate_cmd->add_option("--target", target, "target consumption crossover, meters")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const config::ConfigFile cfg = load_config(opts);
    if (sweep_cmd->parsed())
      return cmd_sweep(opts, cfg, d_min, d_max, step, mode, sweep_scorer);
    if (decide_cmd->parsed()) {
      const double ap = decide_cmd->count("--distance-to-ap") ? distance_to_ap
                                                              : cfg.distance_to_ap_m;
      return cmd_decide(opts, cfg, distance, battery, ap, decide_scorer);
    }
    if (trace_cmd->parsed()) return cmd_trace(opts, cfg, trace_path);
    if (calibrate_cmd->parsed()) return cmd_calibrate(opts, cfg, target);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
