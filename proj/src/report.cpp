// SPDX-License-Identifier: Apache-2.0

#include "bspower/report.hpp"

#include <string>

#include <fmt/format.h>
#include "json.hpp"

namespace bspower {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kBool[] = {"false", "true"};

std::string axis_column(AxisKind kind) {
  switch (kind) {
    case AxisKind::Bandwidth: return "bandwidth_hz";
    case AxisKind::Chains: return "n_chains";
    case AxisKind::Load: return "load";
    case AxisKind::PMaxOp: return "p_max_op";
  }
  return "axis";
}

Json number(double value) { return Json(round_to_display(value)); }

Json breakdown_json(const PowerBreakdown& b) {
  Json j;
  j["p_pa"] = number(b.p_pa);
  j["p_bb"] = number(b.p_bb);
  j["p_rf"] = number(b.p_rf);
  j["eta_pa"] = number(b.eta_pa);
  j["loss_divisor"] = number(b.loss_divisor);
  j["p1_sector"] = number(b.p1_sector);
  j["p0"] = number(b.p0);
  j["p_supply_total"] = number(b.p_supply_total);
  j["is_sleeping"] = b.is_sleeping;
  j["beyond_verified_chains"] = b.beyond_verified_chains;
  return j;
}

Json operating_point_json(const OperatingPoint& op) {
  Json j;
  j["bandwidth_hz"] = number(op.bandwidth_hz);
  j["n_chains"] = op.n_chains;
  j["load"] = number(op.load);
  j["p_max_op"] = op.p_max_op ? number(*op.p_max_op) : Json(nullptr);
  return j;
}

Json envelope(Json spec) {
  Json root;
  root["tool_version"] = BSPOWER_VERSION;
  root["spec"] = std::move(spec);
  return root;
}

std::string finish(const Json& root) { return root.dump(2) + "\n"; }

}  // namespace

std::string format_number(double value) { return fmt::format("{:.6g}", value); }

double round_to_display(double value) { return std::stod(format_number(value)); }

std::string render_eval_csv(const EvalReport& r) {
  const auto& b = r.breakdown;
  std::string out =
      "station,bandwidth_hz,n_chains,load,p_max_op,p_pa,p_bb,p_rf,eta_pa,loss_divisor,"
      "p1_sector,p0,p_supply_total,is_sleeping\n";
  out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", r.station,
                     format_number(r.op.bandwidth_hz), r.op.n_chains, format_number(r.op.load),
                     format_number(r.op.p_max_op.value_or(0.0)), format_number(b.p_pa),
                     format_number(b.p_bb), format_number(b.p_rf), format_number(b.eta_pa),
                     format_number(b.loss_divisor), format_number(b.p1_sector),
                     format_number(b.p0), format_number(b.p_supply_total),
                     kBool[b.is_sleeping]);
  return out;
}

std::string render_eval_json(const EvalReport& r) {
  Json spec;
  spec["command"] = "eval";
  spec["station"] = r.station;
  spec["operating_point"] = operating_point_json(r.op);
  spec["aggregation"] = std::string(to_string(r.aggregation));
  Json root = envelope(std::move(spec));
  root["rows"] = Json::array({breakdown_json(r.breakdown)});
  return finish(root);
}

std::string render_sweep_csv(const SweepResult& result) {
  const auto& spec = result.spec;
  std::string out = axis_column(spec.axis.kind) + ",";
  if (spec.second_axis) out += axis_column(spec.second_axis->kind) + ",";
  out += "p_pa,p_bb,p_rf,eta_pa,p1_sector,p_supply_total,is_sleeping,error\n";

  for (const auto& cell : result.cells) {
    out += format_number(cell.axis_value) + ",";
    if (cell.second_value) out += format_number(*cell.second_value) + ",";
    if (cell.breakdown) {
      const auto& b = *cell.breakdown;
      out += fmt::format("{},{},{},{},{},{},{},\n", format_number(b.p_pa), format_number(b.p_bb),
                         format_number(b.p_rf), format_number(b.eta_pa),
                         format_number(b.p1_sector), format_number(b.p_supply_total),
                         kBool[b.is_sleeping]);
    } else {
      out += fmt::format(",,,,,,,error={}\n", to_string(*cell.error));
    }
  }
  return out;
}

std::string render_sweep_json(const SweepResult& result) {
  const auto& spec = result.spec;
  auto axis_json = [](const SweepAxis& axis) {
    Json j;
    j["name"] = std::string(to_string(axis.kind));
    Json values = Json::array();
    for (double v : axis.values) values.push_back(number(v));
    j["values"] = std::move(values);
    return j;
  };

  Json spec_json;
  spec_json["command"] = "sweep";
  spec_json["station"] = spec.station.name;
  Json axes = Json::array({axis_json(spec.axis)});
  if (spec.second_axis) axes.push_back(axis_json(*spec.second_axis));
  spec_json["axes"] = std::move(axes);
  spec_json["fixed"] = operating_point_json(spec.fixed);
  spec_json["aggregation"] = std::string(to_string(spec.aggregation));

  Json root = envelope(std::move(spec_json));
  Json rows = Json::array();
  for (const auto& cell : result.cells) {
    Json row;
    row[axis_column(spec.axis.kind)] = number(cell.axis_value);
    if (cell.second_value) row[axis_column(spec.second_axis->kind)] = number(*cell.second_value);
    if (cell.breakdown) {
      row.update(breakdown_json(*cell.breakdown));
      row["error"] = nullptr;
    } else {
      row["error"] = std::string(to_string(*cell.error));
    }
    rows.push_back(std::move(row));
  }
  root["rows"] = std::move(rows);
  return finish(root);
}

std::string render_profile_csv(const ProfileReport& r) {
  std::string out =
      "station,profile,slots,duration_s,energy_j,energy_kwh,mean_power_w,sleep_fraction\n";
  out += fmt::format("{},{},{},{},{},{},{},{}\n", r.station, r.profile_label, r.slot_count,
                     format_number(r.energy.duration_s), format_number(r.energy.energy_j),
                     format_number(r.energy.energy_kwh), format_number(r.energy.mean_power_w),
                     format_number(r.energy.sleep_fraction));
  return out;
}

std::string render_profile_json(const ProfileReport& r) {
  Json spec;
  spec["command"] = "profile";
  spec["station"] = r.station;
  spec["profile"] = r.profile_label;
  spec["slots"] = r.slot_count;
  spec["operating_point"] = operating_point_json(r.op);
  spec["aggregation"] = std::string(to_string(r.aggregation));
  Json root = envelope(std::move(spec));
  Json row;
  row["duration_s"] = number(r.energy.duration_s);
  row["energy_j"] = number(r.energy.energy_j);
  row["energy_kwh"] = number(r.energy.energy_kwh);
  row["mean_power_w"] = number(r.energy.mean_power_w);
  row["sleep_fraction"] = number(r.energy.sleep_fraction);
  root["rows"] = Json::array({row});
  return finish(root);
}

std::string render_comparison_csv(const std::vector<ComparisonRow>& rows) {
  std::string out =
      "station,p_pa,p_bb,p_rf,eta_pa,p1_sector,p1_reference,reference_delta,p_supply_total,"
      "error\n";
  for (const auto& row : rows) {
    const std::string ref = row.p1_reference ? format_number(*row.p1_reference) : "";
    const auto delta = row.reference_delta();
    if (row.breakdown) {
      const auto& b = *row.breakdown;
      out += fmt::format("{},{},{},{},{},{},{},{},{},\n", row.station, format_number(b.p_pa),
                         format_number(b.p_bb), format_number(b.p_rf), format_number(b.eta_pa),
                         format_number(b.p1_sector), ref, delta ? format_number(*delta) : "",
                         format_number(b.p_supply_total));
    } else {
      out += fmt::format("{},,,,,,{},,,error={}\n", row.station, ref, to_string(*row.error));
    }
  }
  return out;
}

std::string render_comparison_json(const std::vector<ComparisonRow>& rows,
                                   const OperatingPoint& op, Aggregation aggregation) {
  Json spec;
  spec["command"] = "compare";
  spec["operating_point"] = operating_point_json(op);
  spec["aggregation"] = std::string(to_string(aggregation));
  Json root = envelope(std::move(spec));
  Json out = Json::array();
  for (const auto& row : rows) {
    Json j;
    j["station"] = row.station;
    if (row.breakdown) j.update(breakdown_json(*row.breakdown));
    j["p1_reference"] = row.p1_reference ? number(*row.p1_reference) : Json(nullptr);
    const auto delta = row.reference_delta();
    j["reference_delta"] = delta ? number(*delta) : Json(nullptr);
    j["error"] = row.error ? Json(std::string(to_string(*row.error))) : Json(nullptr);
    out.push_back(std::move(j));
  }
  root["rows"] = std::move(out);
  return finish(root);
}

}  // namespace bspower
