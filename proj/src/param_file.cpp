// SPDX-License-Identifier: Apache-2.0

#include "bspower/param_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

namespace bspower {

namespace {

// Station keys in emission order.
constexpr std::string_view kDoubleKeys[] = {
    "p_pa_limit", "eta_pa_max", "gamma",  "p_bb_base", "p_rf_base",
    "sigma_feed", "sigma_dc",   "sigma_cool", "sigma_ms",
};

double* double_field(BsParameters& p, std::string_view key) {
  if (key == "p_pa_limit") return &p.p_pa_limit;
  if (key == "eta_pa_max") return &p.eta_pa_max;
  if (key == "gamma") return &p.gamma;
  if (key == "p_bb_base") return &p.p_bb_base;
  if (key == "p_rf_base") return &p.p_rf_base;
  if (key == "sigma_feed") return &p.sigma_feed;
  if (key == "sigma_dc") return &p.sigma_dc;
  if (key == "sigma_cool") return &p.sigma_cool;
  if (key == "sigma_ms") return &p.sigma_ms;
  if (key == "p_max_design") return &p.p_max_design;
  if (key == "delta_p") return &p.delta_p;
  if (key == "p_sleep_ref") return &p.p_sleep_ref;
  return nullptr;
}

bool valid_name(std::string_view name) {
  return !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '-' || c == '.';
  });
}

const std::string& plain_scalar(const YAML::Node& node, const std::string& key) {
  if (!node.IsScalar()) {
    throw ParseError(key, fmt::format("'{}' must be a scalar", key));
  }
  return node.Scalar();
}

double parse_double(const YAML::Node& node, const std::string& key) {
  const std::string& text = plain_scalar(node, key);
  if (node.Tag() == "!") {
    throw ParseError(key, fmt::format("'{}' must be a number, got quoted string", key));
  }
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(key, fmt::format("'{}' is not a decimal number: '{}'", key, text));
  }
  return value;
}

int parse_int(const YAML::Node& node, const std::string& key) {
  const std::string& text = plain_scalar(node, key);
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (node.Tag() == "!" || ec != std::errc{} || ptr != end) {
    throw ParseError(key, fmt::format("'{}' must be an integer, got '{}'", key, text));
  }
  return value;
}

BsParameters parse_station(const YAML::Node& node, std::size_t index) {
  if (!node.IsMap()) {
    throw ParseError("stations", fmt::format("stations[{}] must be a mapping", index));
  }
  BsParameters p;
  std::set<std::string> seen;
  for (const auto& entry : node) {
    const auto key = entry.first.as<std::string>();
    const YAML::Node& value = entry.second;
    seen.insert(key);
    if (key == "name") {
      p.name = plain_scalar(value, key);
      if (!valid_name(p.name)) {
        throw ParseError(key, fmt::format("station name '{}' may only contain letters, digits, "
                                          "'_', '-' and '.'",
                                          p.name));
      }
    } else if (key == "bs_type") {
      auto type = parse_bs_type(plain_scalar(value, key));
      if (!type) {
        throw ParseError(key, fmt::format("bs_type must be one of Macro, Pico, Femto, Custom; "
                                          "got '{}'",
                                          value.Scalar()));
      }
      p.bs_type = *type;
    } else if (key == "m_sec") {
      p.m_sec = parse_int(value, key);
    } else if (key == "p1_reference") {
      p.p1_reference = parse_double(value, key);
    } else if (double* field = double_field(p, key)) {
      *field = parse_double(value, key);
    } else {
      throw ParseError(key, fmt::format("unknown key '{}' in stations[{}]", key, index));
    }
  }

  const std::string_view required[] = {
      "name",       "bs_type",  "p_pa_limit", "eta_pa_max", "gamma",
      "p_bb_base",  "p_rf_base", "sigma_feed", "sigma_dc",   "sigma_cool",
      "sigma_ms",   "m_sec",    "p_max_design", "delta_p",  "p_sleep_ref",
  };
  for (std::string_view key : required) {
    if (!seen.count(std::string(key))) {
      throw ParseError(std::string(key),
                       fmt::format("missing key '{}' in stations[{}]", key, index));
    }
  }
  validate(p);
  return p;
}

std::string format_double(double value) {
  std::string text = fmt::format("{}", value);
  if (text.find_first_of(".eEn") == std::string::npos) text += ".0";
  return text;
}

void emit_station(std::ostringstream& out, const BsParameters& p) {
  out << "  - name: " << p.name << '\n';
  out << "    bs_type: " << to_string(p.bs_type) << '\n';
  BsParameters copy = p;
  for (std::string_view key : kDoubleKeys) {
    out << "    " << key << ": " << format_double(*double_field(copy, key)) << '\n';
  }
  out << "    m_sec: " << p.m_sec << '\n';
  out << "    p_max_design: " << format_double(p.p_max_design) << '\n';
  out << "    delta_p: " << format_double(p.delta_p) << '\n';
  out << "    p_sleep_ref: " << format_double(p.p_sleep_ref) << '\n';
  if (p.p1_reference) {
    out << "    p1_reference: " << format_double(*p.p1_reference)
        << "  # reference only, not used in computation\n";
  }
}

}  // namespace

const BsParameters* ParameterFile::find(std::string_view name) const {
  auto it = std::find_if(stations.begin(), stations.end(),
                         [&](const BsParameters& s) { return s.name == name; });
  return it == stations.end() ? nullptr : &*it;
}

ParameterFile parse_parameters(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::Exception& e) {
    throw ParseError("", fmt::format("malformed YAML: {}", e.what()));
  }
  if (!root.IsMap()) {
    throw ParseError("", "parameter file must be a mapping with schema_version and stations");
  }

  ParameterFile file;
  bool have_version = false;
  bool have_stations = false;
  for (const auto& entry : root) {
    const auto key = entry.first.as<std::string>();
    if (key == "schema_version") {
      file.schema_version = parse_int(entry.second, key);
      if (file.schema_version != kSchemaVersion) {
        throw ParseError(key, fmt::format("unsupported schema_version {} (expected {})",
                                          file.schema_version, kSchemaVersion));
      }
      have_version = true;
    } else if (key == "stations") {
      const YAML::Node& list = entry.second;
      if (!list.IsSequence() || list.size() == 0) {
        throw ParseError(key, "'stations' must be a non-empty list");
      }
      std::set<std::string> names;
      for (std::size_t i = 0; i < list.size(); ++i) {
        BsParameters station = parse_station(list[i], i);
        if (!names.insert(station.name).second) {
          throw ValidationError("name", fmt::format("duplicate station name '{}'", station.name));
        }
        file.stations.push_back(std::move(station));
      }
      have_stations = true;
    } else {
      throw ParseError(key, fmt::format("unknown top-level key '{}'", key));
    }
  }
  if (!have_version) throw ParseError("schema_version", "missing key 'schema_version'");
  if (!have_stations) throw ParseError("stations", "missing key 'stations'");
  return file;
}

ParameterFile load_parameters(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError(fmt::format("cannot open parameter file '{}'", path.string()));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw IoError(fmt::format("error reading parameter file '{}'", path.string()));
  }
  return parse_parameters(buffer.str());
}

std::string dump_parameters(const ParameterFile& file) {
  std::ostringstream out;
  out << "# Base-station power model parameters (powers in W, bandwidth in Hz)\n";
  out << "schema_version: " << file.schema_version << '\n';
  out << "stations:\n";
  for (const auto& station : file.stations) emit_station(out, station);
  return out.str();
}

std::string dump_parameters(const BsParameters& params) {
  return dump_parameters(ParameterFile{kSchemaVersion, {params}});
}

void save_parameters(const ParameterFile& file, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError(fmt::format("cannot write parameter file '{}'", path.string()));
  }
  out << dump_parameters(file);
  if (!out) {
    throw IoError(fmt::format("error writing parameter file '{}'", path.string()));
  }
}

}  // namespace bspower
