#pragma once

#include <stdexcept>
#include <string>

#include "ifsel/sim.hpp"

namespace ifsel::csv {

// Raised on a malformed trace file; what() names the offending line.
class TraceParseError : public std::runtime_error {
 public:
  explicit TraceParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numbers in all emitted CSV use '.' as decimal separator and 6
// significant digits.
std::string format_number(double v);

// Header: distance_m, weight_<id>..., consumption_<id>..., chosen
// (interface columns in config order).
std::string sweep_csv(const sim::SweepResult& result);

// Header: time_s, attached, selected, handover, weight_<id>...
// Interfaces absent from a row's ranking leave their weight cell empty.
std::string trace_csv(const std::vector<sim::TraceRow>& rows,
                      const std::vector<std::string>& interface_ids);

// Parses "time,distance,battery,wlan_available" rows; a leading header
// line is skipped when present. wlan_available accepts 0/1/true/false.
sim::MobilityTrace parse_trace_csv(const std::string& text);

}  // namespace ifsel::csv
