#include "ifsel/csv.hpp"

#include <cstdio>
#include <sstream>

namespace ifsel::csv {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string sweep_csv(const sim::SweepResult& result) {
  std::ostringstream os;
  os << "distance_m";
  for (const auto& id : result.interface_ids) os << ",weight_" << id;
  for (const auto& id : result.interface_ids) os << ",consumption_" << id;
  os << ",chosen\n";
  for (const auto& row : result.rows) {
    os << format_number(row.distance_m);
    for (double w : row.weights) os << ',' << format_number(w);
    for (double c : row.consumptions_mws) os << ',' << format_number(c);
    os << ',' << row.chosen << '\n';
  }
  return os.str();
}

std::string trace_csv(const std::vector<sim::TraceRow>& rows,
                      const std::vector<std::string>& interface_ids) {
  std::ostringstream os;
  os << "time_s,attached,selected,handover";
  for (const auto& id : interface_ids) os << ",weight_" << id;
  os << '\n';
  for (const auto& row : rows) {
    os << format_number(row.time_s) << ',' << decision::to_string(row.state.attached) << ','
       << (row.selected ? *row.selected : "") << ',' << (row.handover ? 1 : 0);
    for (const auto& id : interface_ids) {
      os << ',';
      for (const auto& [rid, weight] : row.ranking.ordered)
        if (rid == id) os << format_number(weight);
    }
    os << '\n';
  }
  return os.str();
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ',')) {
    // trim surrounding whitespace
    const auto begin = field.find_first_not_of(" \t\r");
    const auto end = field.find_last_not_of(" \t\r");
    out.push_back(begin == std::string::npos ? "" : field.substr(begin, end - begin + 1));
  }
  return out;
}

double parse_double(const std::string& field, int line_no, const char* what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(field, &pos);
    if (pos != field.size()) throw std::invalid_argument(field);
    return v;
  } catch (const std::exception&) {
    throw TraceParseError("trace line " + std::to_string(line_no) + ": bad " + what + " '" +
                          field + "'");
  }
}

bool parse_bool(const std::string& field, int line_no) {
  if (field == "0" || field == "false") return false;
  if (field == "1" || field == "true") return true;
  throw TraceParseError("trace line " + std::to_string(line_no) +
                        ": bad wlan_available '" + field + "'");
}

}  // namespace

sim::MobilityTrace parse_trace_csv(const std::string& text) {
  sim::MobilityTrace trace;
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  bool first_content = true;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (first_content) {
      first_content = false;
      if (line.rfind("time", 0) == 0) continue;  // header row
    }
    const auto fields = split_fields(line);
    if (fields.size() != 4)
      throw TraceParseError("trace line " + std::to_string(line_no) + ": expected 4 fields (" +
                            "time,distance,battery,wlan_available), got " +
                            std::to_string(fields.size()));
    sim::TraceSample s;
    s.time_s = parse_double(fields[0], line_no, "time");
    s.distance_to_bs_m = parse_double(fields[1], line_no, "distance");
    s.battery_level = parse_double(fields[2], line_no, "battery");
    s.wlan_available = parse_bool(fields[3], line_no);
    trace.samples.push_back(s);
  }
  trace.validate();
  return trace;
}

}  // namespace ifsel::csv
