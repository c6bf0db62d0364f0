// SPDX-License-Identifier: Apache-2.0

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "bspower/analysis.hpp"

namespace bspower {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_number(std::string_view text, double& out) {
  text = trim(text);
  if (text.empty()) return false;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc{} && ptr == end && std::isfinite(out);
}

}  // namespace

double TrafficProfile::total_duration() const {
  double total = 0.0;
  for (const auto& slot : slots) total += slot.duration_s;
  return total;
}

void validate(const TrafficProfile& profile) {
  if (profile.slots.empty()) throw SpecError("traffic profile has no slots");
  for (std::size_t i = 0; i < profile.slots.size(); ++i) {
    const auto& slot = profile.slots[i];
    if (!(slot.duration_s > 0.0) || !std::isfinite(slot.duration_s)) {
      throw SpecError(fmt::format("slot {}: duration {} must be > 0", i, slot.duration_s));
    }
    if (!(slot.load >= 0.0 && slot.load <= 1.0)) {
      throw SpecError(fmt::format("slot {}: load {} must lie in [0, 1]", i, slot.load));
    }
  }
}

TrafficProfile parse_traffic_csv(std::string_view text) {
  TrafficProfile profile;
  bool have_header = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      throw TrafficParseError(line_no,
                              fmt::format("line {}: expected exactly two columns", line_no));
    }
    const auto first = trim(line.substr(0, comma));
    const auto second = trim(line.substr(comma + 1));

    if (!have_header) {
      if (first != "duration_s" || second != "load") {
        throw TrafficParseError(
            line_no, fmt::format("line {}: expected header 'duration_s,load'", line_no));
      }
      have_header = true;
      continue;
    }

    TrafficSlot slot;
    if (!parse_number(first, slot.duration_s) || !(slot.duration_s > 0.0)) {
      throw TrafficParseError(
          line_no, fmt::format("line {}: duration '{}' must be a number > 0", line_no, first));
    }
    if (!parse_number(second, slot.load) || slot.load < 0.0 || slot.load > 1.0) {
      throw TrafficParseError(
          line_no, fmt::format("line {}: load '{}' must be a number in [0, 1]", line_no, second));
    }
    profile.slots.push_back(slot);
  }
  if (profile.slots.empty()) {
    throw TrafficParseError(0, "traffic profile contains no slots");
  }
  return profile;
}

TrafficProfile load_traffic_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw TrafficParseError(0, fmt::format("cannot open traffic file '{}'", path.string()));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  TrafficProfile profile = parse_traffic_csv(buffer.str());
  profile.label = path.filename().string();
  return profile;
}

EnergyReport integrate_energy(const BsParameters& params, const TrafficProfile& profile,
                              const OperatingPoint& op_defaults, Aggregation aggregation) {
  validate(profile);

  EnergyReport report;
  double sleep_time = 0.0;
  for (std::size_t i = 0; i < profile.slots.size(); ++i) {
    const auto& slot = profile.slots[i];
    OperatingPoint op = op_defaults;
    op.load = slot.load;
    double power = 0.0;
    try {
      power = supply_power(params, op, aggregation).p_supply_total;
    } catch (const ModelError& e) {
      throw ModelError(e.code(), fmt::format("slot {}: {}", i, e.what()), i);
    }
    report.energy_j += power * slot.duration_s;
    report.duration_s += slot.duration_s;
    if (slot.load == 0.0) sleep_time += slot.duration_s;
  }
  report.energy_kwh = report.energy_j / kJoulesPerKwh;
  report.mean_power_w = report.energy_j / report.duration_s;
  report.sleep_fraction = sleep_time / report.duration_s;
  return report;
}

std::optional<double> ComparisonRow::reference_delta() const {
  if (!breakdown || !p1_reference) return std::nullopt;
  return breakdown->p1_sector - *p1_reference;
}

std::vector<ComparisonRow> compare_stations(const std::vector<BsParameters>& stations,
                                            const OperatingPoint& op_point,
                                            Aggregation aggregation) {
  if (stations.empty()) throw SpecError("station list is empty");
  std::vector<ComparisonRow> rows;
  rows.reserve(stations.size());
  for (const auto& station : stations) {
    ComparisonRow row;
    row.station = station.name;
    row.p1_reference = station.p1_reference;
    try {
      row.breakdown = supply_power(station, op_point, aggregation);
    } catch (const ModelError& e) {
      row.error = e.code();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace bspower
