// SPDX-License-Identifier: Apache-2.0
//
// bspower: command-line front end for the base-station power model.
//
// Exit codes: 0 success, 2 usage/validation error, 3 model-domain error.

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "bspower/analysis.hpp"
#include "bspower/model.hpp"
#include "bspower/param_file.hpp"
#include "bspower/presets.hpp"
#include "bspower/report.hpp"

namespace {

using namespace bspower;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitModel = 3;

/// Raised for bad flag values detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StationOptions {
  std::string preset;
  std::string params;  // <file>#<name>
};

struct KnobOptions {
  double bandwidth_hz = kReferenceBandwidthHz;
  int chains = 1;
  double load = 1.0;
  std::optional<double> pmax;
  std::optional<double> pmax_dbm;
  std::string aggregation = "per-pa";
};

struct OutputOptions {
  std::string format = "csv";
  std::string out;
};

void add_station(CLI::App* cmd, StationOptions& s) {
  cmd->add_option("station", s.preset, "Preset name: macro | pico | femto");
  cmd->add_option("--params", s.params, "Custom station as <file>#<name>");
}

void add_knobs(CLI::App* cmd, KnobOptions& k) {
  cmd->add_option("--bandwidth", k.bandwidth_hz, "Transmission bandwidth W in Hz (default 10e6)");
  cmd->add_option("--chains", k.chains, "Active radio chains D (default 1)");
  cmd->add_option("--load", k.load, "Load share chi in [0, 1] (default 1)");
  auto* pmax = cmd->add_option("--pmax", k.pmax, "Operating max transmit power in W");
  cmd->add_option("--pmax-dbm", k.pmax_dbm, "Operating max transmit power in dBm")
      ->excludes(pmax);
  cmd->add_option("--aggregation", k.aggregation, "PA term: per-pa | total")
      ->check(CLI::IsMember({"per-pa", "total"}));
}

void add_output(CLI::App* cmd, OutputOptions& o, std::vector<std::string> formats) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
  cmd->add_option("--out", o.out, "Output path (default standard output)");
}

BsParameters resolve_station(const StationOptions& s) {
  if (!s.preset.empty() && !s.params.empty()) {
    throw UsageError("give either a preset name or --params, not both");
  }
  if (!s.params.empty()) {
    const auto hash = s.params.rfind('#');
    const std::string path = hash == std::string::npos ? s.params : s.params.substr(0, hash);
    const ParameterFile file = load_parameters(path);
    if (hash == std::string::npos) {
      if (file.stations.size() != 1) {
        throw UsageError(fmt::format("'{}' holds {} stations; select one with <file>#<name>",
                                     path, file.stations.size()));
      }
      return file.stations.front();
    }
    const std::string name = s.params.substr(hash + 1);
    if (const BsParameters* station = file.find(name)) return *station;
    throw UsageError(fmt::format("no station named '{}' in '{}'", name, path));
  }
  if (s.preset.empty()) throw UsageError("missing station: give a preset name or --params");
  const auto type = parse_preset(s.preset);
  if (!type) {
    throw UsageError(fmt::format("unknown preset '{}' (expected macro, pico or femto)", s.preset));
  }
  return preset(*type);
}

OperatingPoint resolve_knobs(const KnobOptions& k) {
  OperatingPoint op;
  op.bandwidth_hz = k.bandwidth_hz;
  op.n_chains = k.chains;
  op.load = k.load;
  if (k.pmax) op.p_max_op = *k.pmax;
  if (k.pmax_dbm) op.p_max_op = std::pow(10.0, (*k.pmax_dbm - 30.0) / 10.0);
  return op;
}

Aggregation resolve_aggregation(const KnobOptions& k) {
  return parse_aggregation(k.aggregation).value_or(Aggregation::PerPa);
}

void emit(const OutputOptions& o, const std::string& text) {
  if (o.out.empty() || o.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError(fmt::format("cannot write '{}'", o.out));
  file << text;
}

void warn_unverified(const OperatingPoint& op) {
  if (op.n_chains > kMaxVerifiedChains) {
    std::cerr << fmt::format("warning: {} radio chains exceeds the {} the model was checked "
                             "against\n",
                             op.n_chains, kMaxVerifiedChains);
  }
}

// ----------------------------------------------------------------- eval

int run_eval(const StationOptions& s, const KnobOptions& k, const OutputOptions& o) {
  const BsParameters station = resolve_station(s);
  EvalReport report;
  report.station = station.name;
  report.op = resolve_knobs(k);
  report.aggregation = resolve_aggregation(k);
  report.breakdown = supply_power(station, report.op, report.aggregation);
  report.op.p_max_op = report.op.resolved_p_max(station);
  warn_unverified(report.op);
  emit(o, o.format == "json" ? render_eval_json(report) : render_eval_csv(report));
  return kExitOk;
}

// ---------------------------------------------------------------- sweep

double parse_value(std::string_view text, std::string_view axis) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw UsageError(fmt::format("axis '{}': '{}' is not a number", axis, text));
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  for (;;) {
    const auto pos = text.find(sep);
    parts.push_back(text.substr(0, pos));
    if (pos == std::string_view::npos) return parts;
    text = text.substr(pos + 1);
  }
}

/// `<name>=<v1,v2,...>` or `<name>=<start>:<step>:<stop>` (stop inclusive).
SweepAxis parse_axis(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) {
    throw UsageError(fmt::format("axis '{}' must look like <name>=<values>", text));
  }
  const auto name = text.substr(0, eq);
  const auto kind = parse_axis_kind(name);
  if (!kind) {
    throw UsageError(
        fmt::format("unknown axis '{}' (expected bandwidth, chains, load or pmax)", name));
  }
  SweepAxis axis{*kind, {}};
  const auto body = text.substr(eq + 1);
  if (body.find(':') != std::string_view::npos) {
    const auto parts = split(body, ':');
    if (parts.size() != 3) {
      throw UsageError(fmt::format("axis '{}': range must be start:step:stop", name));
    }
    const double start = parse_value(parts[0], name);
    const double step = parse_value(parts[1], name);
    const double stop = parse_value(parts[2], name);
    if (!(step > 0.0) || stop < start) {
      throw UsageError(fmt::format("axis '{}': need step > 0 and stop >= start", name));
    }
    const double tol = 1e-9 * std::max(1.0, std::abs(stop));
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    if (count > 1'000'000) throw UsageError(fmt::format("axis '{}': too many points", name));
    for (std::size_t i = 0; i < count; ++i) {
      double v = start + static_cast<double>(i) * step;
      if (std::abs(v - stop) <= tol) v = stop;
      axis.values.push_back(v);
    }
  } else {
    for (auto part : split(body, ',')) axis.values.push_back(parse_value(part, name));
  }
  return axis;
}

int run_sweep_cmd(const StationOptions& s, const KnobOptions& k, const OutputOptions& o,
                  const std::vector<std::string>& axes) {
  if (axes.empty() || axes.size() > 2) throw UsageError("sweep takes one or two --axis options");
  if (o.format == "svg" && o.out.empty()) throw UsageError("--format svg requires --out");

  SweepSpec spec;
  spec.station = resolve_station(s);
  spec.axis = parse_axis(axes[0]);
  if (axes.size() == 2) spec.second_axis = parse_axis(axes[1]);
  spec.fixed = resolve_knobs(k);
  spec.aggregation = resolve_aggregation(k);

  try {
    validate(spec);
  } catch (const SpecError& e) {
    throw UsageError(e.what());
  }
  const SweepResult result = run_sweep(spec, std::max(1u, std::thread::hardware_concurrency()));

  std::string text;
  if (o.format == "json") {
    text = render_sweep_json(result);
  } else if (o.format == "svg") {
    text = render_sweep_svg(result);
  } else {
    text = render_sweep_csv(result);
  }
  emit(o, text);

  const std::size_t failed = result.cells.size() - result.succeeded();
  if (failed > 0) {
    std::cerr << fmt::format("{} of {} cells failed\n", failed, result.cells.size());
  }
  return result.succeeded() > 0 ? kExitOk : kExitModel;
}

// -------------------------------------------------------------- profile

int run_profile(const StationOptions& s, const KnobOptions& k, const OutputOptions& o,
                const std::string& traffic) {
  const BsParameters station = resolve_station(s);
  ProfileReport report;
  report.station = station.name;
  report.op = resolve_knobs(k);
  report.aggregation = resolve_aggregation(k);

  const TrafficProfile profile = load_traffic_csv(traffic);
  report.profile_label = profile.label;
  report.slot_count = profile.slots.size();
  report.energy = integrate_energy(station, profile, report.op, report.aggregation);
  report.op.p_max_op = report.op.resolved_p_max(station);
  warn_unverified(report.op);
  emit(o, o.format == "json" ? render_profile_json(report) : render_profile_csv(report));
  return kExitOk;
}

// -------------------------------------------------------------- compare

int run_compare(const std::vector<std::string>& names, const std::string& params_file,
                const KnobOptions& k, const OutputOptions& o) {
  std::vector<BsParameters> stations;
  for (const auto& name : names) stations.push_back(resolve_station({name, ""}));
  if (!params_file.empty()) {
    for (auto& station : load_parameters(params_file).stations) stations.push_back(station);
  }
  if (stations.empty()) {
    for (PresetType t : kAllPresets) stations.push_back(preset(t));
  }
  const OperatingPoint op = resolve_knobs(k);
  const Aggregation aggregation = resolve_aggregation(k);
  const auto rows = compare_stations(stations, op, aggregation);
  emit(o, o.format == "json" ? render_comparison_json(rows, op, aggregation)
                             : render_comparison_csv(rows));
  for (const auto& row : rows) {
    if (const auto delta = row.reference_delta()) {
      std::cerr << fmt::format("note: {} computed P1 differs from published reference by {} W\n",
                               row.station, format_number(*delta));
    }
  }
  return kExitOk;
}

// --------------------------------------------------------------- params

struct ParamsOptions {
  bool list = false;
  std::string show;
  std::string dump;
  std::string validate;
};

int run_params(const ParamsOptions& p) {
  const int chosen = int(p.list) + int(!p.show.empty()) + int(!p.dump.empty()) +
                     int(!p.validate.empty());
  if (chosen != 1) throw UsageError("params takes exactly one of --list, --show, --dump, --validate");

  if (p.list) {
    std::string line;
    for (PresetType t : kAllPresets) {
      if (!line.empty()) line += ' ';
      line += preset_name(t);
    }
    std::cout << line << '\n';
  } else if (!p.show.empty()) {
    std::cout << dump_parameters(resolve_station({p.show, ""}));
  } else if (!p.dump.empty()) {
    ParameterFile file;
    for (PresetType t : kAllPresets) file.stations.push_back(preset(t));
    save_parameters(file, p.dump);
  } else {
    const ParameterFile file = load_parameters(p.validate);
    std::cout << fmt::format("OK: {} station(s)\n", file.stations.size());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Base-station power consumption model"};
  app.set_version_flag("--version", BSPOWER_VERSION);
  app.require_subcommand(1);

  StationOptions station;
  KnobOptions knobs;
  OutputOptions output;

  auto* eval = app.add_subcommand("eval", "Evaluate one operating point");
  add_station(eval, station);
  add_knobs(eval, knobs);
  add_output(eval, output, {"csv", "json"});

  std::vector<std::string> axes;
  auto* sweep = app.add_subcommand("sweep", "Sweep one or two operating knobs");
  add_station(sweep, station);
  add_knobs(sweep, knobs);
  add_output(sweep, output, {"csv", "json", "svg"});
  sweep->add_option("--axis", axes, "<name>=<v1,v2,...> or <name>=<start>:<step>:<stop>")
      ->required();

  std::string traffic;
  auto* profile = app.add_subcommand("profile", "Integrate energy over a traffic profile");
  add_station(profile, station);
  add_knobs(profile, knobs);
  add_output(profile, output, {"csv", "json"});
  profile->add_option("--traffic", traffic, "CSV with columns duration_s,load")->required();

  std::vector<std::string> compare_names;
  std::string compare_params;
  auto* compare = app.add_subcommand("compare", "Compare stations against published P1 values");
  compare->add_option("stations", compare_names, "Preset names (default: all presets)");
  compare->add_option("--params", compare_params, "Add every station from a parameter file");
  add_knobs(compare, knobs);
  add_output(compare, output, {"csv", "json"});

  ParamsOptions params;
  auto* params_cmd = app.add_subcommand("params", "List, show, dump or validate parameter sets");
  params_cmd->add_flag("--list", params.list, "List preset names");
  params_cmd->add_option("--show", params.show, "Print one preset");
  params_cmd->add_option("--dump", params.dump, "Write all presets to a parameter file");
  params_cmd->add_option("--validate", params.validate, "Load and validate a parameter file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval) return run_eval(station, knobs, output);
    if (*sweep) return run_sweep_cmd(station, knobs, output, axes);
    if (*profile) return run_profile(station, knobs, output, traffic);
    if (*compare) return run_compare(compare_names, compare_params, knobs, output);
    if (*params_cmd) return run_params(params);
  } catch (const ModelError& e) {
    std::cerr << fmt::format("{}: {}\n", e.name(), e.what());
    return e.code() == ModelErrorCode::InvalidOperatingPoint ? kExitUsage : kExitModel;
  } catch (const ValidationError& e) {
    std::cerr << fmt::format("ValidationError: {}: {}\n", e.field(), e.what());
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << fmt::format("ParseError: {}\n", e.what());
    return kExitUsage;
  } catch (const TrafficParseError& e) {
    std::cerr << fmt::format("TrafficParseError: {}\n", e.what());
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << fmt::format("IoError: {}\n", e.what());
    return kExitUsage;
  } catch (const SpecError& e) {
    std::cerr << fmt::format("SpecError: {}\n", e.what());
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << fmt::format("error: {}\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
