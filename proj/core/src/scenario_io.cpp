// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cefkit/scenario_io.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <utility>

#include "cefkit/error.hpp"
#include "cefkit/quantity.hpp"

namespace cefkit {
namespace {


constexpr double kInf = std::numeric_limits<double>::infinity();

struct Range {
  double lo = -kInf;
  double hi = kInf;
  bool lo_open = false;

  bool contains(double v) const { return (lo_open ? v > lo : v >= lo) && v <= hi; }
  std::string describe() const {
    std::string out;
    if (lo != -kInf) out += (lo_open ? "> " : ">= ") + format_number(lo);
    if (hi != kInf) out += (out.empty() ? "" : " and ") + ("<= " + format_number(hi));
    return out;
  }
};

const Range kAny{};
const Range kPositive{0.0, kInf, true};
const Range kNonNegative{0.0, kInf, false};
const Range kUnitFraction{0.0, 1.0, true};
const Range kAtLeastOne{1.0, kInf, false};

enum class Type { Number, Integer, Seed, Bool, Text, Env, Dir };

struct Field {
  std::string_view section;
  std::string_view key;
  Type type;
  QuantityKind kind = QuantityKind::Real;
  Range range = kAny;
  std::function<double&(ScenarioDocument&)> number = nullptr;
  std::function<int&(ScenarioDocument&)> integer = nullptr;
  std::function<std::uint64_t&(ScenarioDocument&)> seed = nullptr;
  std::function<bool&(ScenarioDocument&)> flag = nullptr;
  std::function<std::string&(ScenarioDocument&)> text = nullptr;
  std::function<Environment&(ScenarioDocument&)> environment = nullptr;
  std::function<Direction&(ScenarioDocument&)> direction = nullptr;
};

Field number(std::string_view section, std::string_view key, QuantityKind kind, Range range,
             std::function<double&(ScenarioDocument&)> get) {
  Field f{section, key, Type::Number, kind, range};
  f.number = std::move(get);
  return f;
}

Field integer(std::string_view section, std::string_view key, Range range,
              std::function<int&(ScenarioDocument&)> get) {
  Field f{section, key, Type::Integer, QuantityKind::Count, range};
  f.integer = std::move(get);
  return f;
}

Field flag(std::string_view section, std::string_view key,
           std::function<bool&(ScenarioDocument&)> get) {
  Field f{section, key, Type::Bool};
  f.flag = std::move(get);
  return f;
}

std::vector<Field> terminal_fields(std::string_view section,
                                   TerminalProfile& (*pick)(ScenarioDocument&)) {
  return {
      number(section, "aperture", QuantityKind::Area, kPositive,
             [pick](ScenarioDocument& d) -> double& { return pick(d).aperture_area_m2; }),
      number(section, "antenna_efficiency", QuantityKind::Fraction, kUnitFraction,
             [pick](ScenarioDocument& d) -> double& { return pick(d).antenna_efficiency; }),
      integer(section, "elements", kAtLeastOne,
              [pick](ScenarioDocument& d) -> int& { return pick(d).element_count; }),
      number(section, "cooling", QuantityKind::Fraction, kNonNegative,
             [pick](ScenarioDocument& d) -> double& { return pick(d).cooling_overhead; }),
      number(section, "screen_power", QuantityKind::PowerWatts, kNonNegative,
             [pick](ScenarioDocument& d) -> double& { return pick(d).screen_power_w; }),
  };
}

const std::vector<Field>& fields() {
  static const std::vector<Field> table = [] {
    std::vector<Field> t;
    Field name{"band", "name", Type::Text};
    name.text = [](ScenarioDocument& d) -> std::string& { return d.link.band.name; };
    t.push_back(name);
    t.push_back(number("band", "frequency", QuantityKind::Frequency, kPositive,
                       [](ScenarioDocument& d) -> double& { return d.link.band.carrier_frequency_hz; }));
    t.push_back(number("band", "bandwidth", QuantityKind::Frequency, kPositive,
                       [](ScenarioDocument& d) -> double& { return d.link.band.bandwidth_hz; }));
    t.push_back(number("band", "pa_efficiency", QuantityKind::Fraction, kUnitFraction,
                       [](ScenarioDocument& d) -> double& { return d.link.band.pa_efficiency; }));
    t.push_back(number("band", "pa_gain", QuantityKind::Decibel, kAny,
                       [](ScenarioDocument& d) -> double& { return d.link.band.pa_gain_db; }));
    t.push_back(number("band", "lna_gain", QuantityKind::Decibel, kAny,
                       [](ScenarioDocument& d) -> double& { return d.link.band.lna_gain_db; }));
    t.push_back(number("band", "lna_fom", QuantityKind::PerMilliwatt, kPositive,
                       [](ScenarioDocument& d) -> double& { return d.link.band.lna_fom_per_mw; }));
    t.push_back(number("band", "mixer_loss", QuantityKind::Decibel, kNonNegative,
                       [](ScenarioDocument& d) -> double& { return d.link.band.mixer_loss_db; }));
    t.push_back(number("band", "phase_shifter_loss", QuantityKind::Decibel, kNonNegative,
                       [](ScenarioDocument& d) -> double& { return d.link.band.phase_shifter_loss_db; }));
    t.push_back(number("band", "lo_power", QuantityKind::PowerDbm, kAny,
                       [](ScenarioDocument& d) -> double& { return d.link.band.lo_power_dbm; }));
    t.push_back(number("band", "converter_power", QuantityKind::PowerPerHertz, kNonNegative,
                       [](ScenarioDocument& d) -> double& { return d.link.band.converter_power_per_hz; }));

    for (auto& f : terminal_fields("bs", [](ScenarioDocument& d) -> TerminalProfile& { return d.link.bs; })) {
      t.push_back(std::move(f));
    }
    for (auto& f : terminal_fields("ue", [](ScenarioDocument& d) -> TerminalProfile& { return d.link.ue; })) {
      t.push_back(std::move(f));
    }

    t.push_back(number("link", "distance", QuantityKind::Length, kAtLeastOne,
                       [](ScenarioDocument& d) -> double& { return d.link.distance_m; }));
    Field env{"link", "environment", Type::Env};
    env.environment = [](ScenarioDocument& d) -> Environment& { return d.link.environment; };
    t.push_back(env);
    Field dir{"link", "direction", Type::Dir};
    dir.direction = [](ScenarioDocument& d) -> Direction& { return d.link.direction; };
    t.push_back(dir);
    t.push_back(number("link", "tx_power", QuantityKind::PowerDbm, kAny,
                       [](ScenarioDocument& d) -> double& { return d.link.tx_power_dbm; }));
    t.push_back(number("link", "ple_los", QuantityKind::Real, kPositive,
                       [](ScenarioDocument& d) -> double& { return d.link.ple_los; }));
    t.push_back(number("link", "ple_nlos", QuantityKind::Real, kPositive,
                       [](ScenarioDocument& d) -> double& { return d.link.ple_nlos; }));
    t.push_back(number("link", "noise_figure", QuantityKind::Decibel, kNonNegative,
                       [](ScenarioDocument& d) -> double& { return d.link.noise_figure_db; }));
    t.push_back(number("link", "temperature", QuantityKind::Temperature, kPositive,
                       [](ScenarioDocument& d) -> double& { return d.link.temperature_k; }));

    t.push_back(number("network", "area", QuantityKind::Area, kPositive,
                       [](ScenarioDocument& d) -> double& { return d.network.area_m2; }));
    t.push_back(number("network", "cell_radius", QuantityKind::Length, kAtLeastOne,
                       [](ScenarioDocument& d) -> double& { return d.network.cell_radius_m; }));
    t.push_back(integer("network", "arrays_per_bs", kAtLeastOne,
                        [](ScenarioDocument& d) -> int& { return d.network.arrays_per_bs; }));
    t.push_back(integer("network", "ues_per_cell", kAtLeastOne,
                        [](ScenarioDocument& d) -> int& { return d.network.ues_per_cell; }));
    t.push_back(number("network", "target_edge_snr", QuantityKind::Decibel, kAny,
                       [](ScenarioDocument& d) -> double& { return d.network.target_edge_snr_db; }));
    t.push_back(number("network", "los_d1", QuantityKind::Length, kPositive,
                       [](ScenarioDocument& d) -> double& { return d.network.los.d1_m; }));
    t.push_back(number("network", "los_d2", QuantityKind::Length, kPositive,
                       [](ScenarioDocument& d) -> double& { return d.network.los.d2_m; }));
    Field seed{"network", "seed", Type::Seed, QuantityKind::Count};
    seed.seed = [](ScenarioDocument& d) -> std::uint64_t& { return d.network.seed; };
    t.push_back(seed);
    t.push_back(integer("network", "drops", kAtLeastOne,
                        [](ScenarioDocument& d) -> int& { return d.network.drops; }));
    t.push_back(flag("network", "interference",
                     [](ScenarioDocument& d) -> bool& { return d.network.interference; }));
    t.push_back(flag("network", "wrap_around",
                     [](ScenarioDocument& d) -> bool& { return d.network.wrap_around; }));
    t.push_back(number("network", "sidelobe_discrimination", QuantityKind::Decibel, kNonNegative,
                       [](ScenarioDocument& d) -> double& { return d.network.sidelobe_discrimination_db; }));
    t.push_back(number("network", "eirp_ceiling", QuantityKind::PowerDbm, kAny,
                       [](ScenarioDocument& d) -> double& { return d.network.eirp_ceiling_dbm; }));
    return t;
  }();
  return table;
}

constexpr std::string_view kSections[] = {"band", "bs", "ue", "link", "network"};

struct Entry {
  std::string section;
  std::string key;
  std::string value;
  std::size_t line = 0;
  std::size_t key_column = 0;
  std::size_t value_column = 0;
};

// Removes a trailing comment that is not inside a quoted string.
std::string_view strip_comment(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '_' || c == '-';
    if (!ok) return false;
  }
  return true;
}

std::vector<Entry> lex(std::string_view text) {
  std::vector<Entry> entries;
  std::string section;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const std::string_view line = strip_comment(raw);
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    const std::size_t col = line.find_first_not_of(" \t\r") + 1;

    if (body.front() == '[') {
      if (body.back() != ']') throw ParseError(line_no, col, "unterminated section header");
      const std::string name(trim(body.substr(1, body.size() - 2)));
      bool known = false;
      for (auto s : kSections) known = known || s == name;
      if (!known) throw ParseError(line_no, col + 1, "unknown section [" + name + "]");
      section = name;
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, col, "expected 'key = value'");
    const std::string_view key = trim(line.substr(0, eq));
    if (!is_identifier(key)) throw ParseError(line_no, col, "malformed key");
    const std::string_view after = line.substr(eq + 1);
    const std::string_view value = trim(after);
    if (value.empty()) throw ParseError(line_no, eq + 2, "missing value for '" + std::string(key) + "'");
    const std::size_t value_col = eq + 2 + after.find_first_not_of(" \t\r");
    entries.push_back({section, std::string(key), std::string(value), line_no, col, value_col});
  }
  return entries;
}

Entry parse_override(const std::string& text) {
  const std::size_t eq = text.find('=');
  const std::size_t dot = text.find('.');
  if (eq == std::string::npos) {
    throw ParseError(0, 1, "override '" + text + "' must look like section.key=value");
  }
  Entry e;
  e.line = 0;
  e.key_column = 1;
  const std::string_view path = trim(std::string_view(text).substr(0, eq));
  if (dot != std::string::npos && dot < eq) {
    e.section = std::string(trim(path.substr(0, path.find('.'))));
    e.key = std::string(trim(path.substr(path.find('.') + 1)));
  } else {
    e.key = std::string(path);
  }
  e.value = std::string(trim(std::string_view(text).substr(eq + 1)));
  e.value_column = eq + 2;
  if (e.value.empty()) throw ParseError(0, e.value_column, "override '" + text + "' has no value");
  if (!e.section.empty()) {
    bool known = false;
    for (auto s : kSections) known = known || s == e.section;
    if (!known) throw ParseError(0, 1, "unknown section '" + e.section + "' in override");
  }
  return e;
}

std::string unquote(const Entry& e) {
  const std::string_view v = e.value;
  if (v.size() >= 2 && v.front() == '"' && v.back() == '"') {
    return std::string(v.substr(1, v.size() - 2));
  }
  if (v.front() == '"') throw ParseError(e.line, e.value_column, "unterminated string");
  return std::string(v);
}

std::string quoted_text(const Entry& e) {
  if (e.value.size() < 2 || e.value.front() != '"' || e.value.back() != '"') {
    throw ParseError(e.line, e.value_column, "'" + e.key + "' expects a quoted string");
  }
  return unquote(e);
}

const Field* find_field(std::string_view section, std::string_view key) {
  for (const auto& f : fields()) {
    if (f.section == section && f.key == key) return &f;
  }
  return nullptr;
}

void apply(ScenarioDocument& doc, const Field& f, const Entry& e) {
  auto fail = [&](std::size_t offset, const std::string& msg) -> ParseError {
    return ParseError(e.line, e.value_column + offset, e.section + "." + e.key + ": " + msg);
  };
  switch (f.type) {
    case Type::Seed: {
      const std::string_view v = trim(e.value);
      std::uint64_t seed = 0;
      const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), seed);
      if (ec != std::errc() || ptr != v.data() + v.size()) {
        throw fail(0, "seed must be a non-negative 64-bit integer");
      }
      f.seed(doc) = seed;
      return;
    }
    case Type::Number:
    case Type::Integer: {
      double v = 0.0;
      try {
        v = parse_quantity(e.value, f.kind);
      } catch (const QuantityError& q) {
        throw fail(q.offset(), q.what());
      }
      if (!f.range.contains(v)) throw fail(0, "value out of range (must be " + f.range.describe() + ")");
      if (f.type == Type::Number) {
        f.number(doc) = v;
      } else {
        if (v > std::numeric_limits<int>::max()) throw fail(0, "value too large");
        f.integer(doc) = static_cast<int>(v);
      }
      return;
    }
    case Type::Bool: {
      const std::string v = unquote(e);
      if (v == "true") {
        f.flag(doc) = true;
      } else if (v == "false") {
        f.flag(doc) = false;
      } else {
        throw fail(0, "expected true or false");
      }
      return;
    }
    case Type::Text:
      f.text(doc) = quoted_text(e);
      return;
    case Type::Env: {
      const std::string v = unquote(e);
      if (v == "los") {
        f.environment(doc) = Environment::LoS;
      } else if (v == "nlos") {
        f.environment(doc) = Environment::NLoS;
      } else {
        throw fail(0, "expected \"los\" or \"nlos\"");
      }
      return;
    }
    case Type::Dir: {
      const std::string v = unquote(e);
      if (v == "ul") {
        f.direction(doc) = Direction::Uplink;
      } else if (v == "dl") {
        f.direction(doc) = Direction::Downlink;
      } else {
        throw fail(0, "expected \"ul\" or \"dl\"");
      }
      return;
    }
  }
}

bool is_preset_key(const Entry& e) {
  return e.key == "preset" && (e.section.empty() || e.section == "band");
}

ScenarioDocument preset_document(std::string_view name, int depth);

ScenarioDocument parse_document(std::string_view text, std::span<const std::string> overrides,
                                int depth) {
  std::vector<Entry> entries = lex(text);
  for (const auto& o : overrides) entries.push_back(parse_override(o));

  const Entry* preset = nullptr;
  for (const auto& e : entries) {
    if (!is_preset_key(e)) continue;
    if (preset != nullptr && e.line != 0 && preset->line != 0) {
      throw ParseError(e.line, e.key_column, "preset given more than once");
    }
    preset = &e;  // an override replaces the file's preset
  }

  ScenarioDocument doc;
  if (preset != nullptr) {
    const std::string name = quoted_text(*preset);
    try {
      doc = preset_document(name, depth + 1);
    } catch (const InvalidArgument& err) {
      throw ParseError(preset->line, preset->value_column, err.what());
    }
  } else {
    doc = preset_document("mmwave-28", depth + 1);
    doc.preset.clear();
  }

  std::vector<std::pair<std::string, std::size_t>> seen;
  for (const auto& e : entries) {
    if (is_preset_key(e)) continue;
    if (e.section.empty()) {
      throw ParseError(e.line, e.key_column, "key '" + e.key + "' must be inside a section");
    }
    const Field* f = find_field(e.section, e.key);
    if (f == nullptr) {
      throw ParseError(e.line, e.key_column, "unknown key '" + e.key + "' in [" + e.section + "]");
    }
    if (e.line != 0) {
      const std::string id = e.section + "." + e.key;
      for (const auto& [name, line] : seen) {
        if (name == id) {
          throw ParseError(e.line, e.key_column,
                           "duplicate key '" + e.key + "' (first set on line " + std::to_string(line) + ")");
        }
      }
      seen.emplace_back(id, e.line);
    }
    apply(doc, *f, e);
  }

  doc.network = network_from(doc.link, doc.network);
  try {
    validate(doc.link);
    validate(doc.network);
  } catch (const InvalidArgument& err) {
    throw ParseError(0, 0, err.what());
  }
  return doc;
}

ScenarioDocument preset_document(std::string_view name, int depth) {
  if (depth > 8) throw InvalidArgument("preset files nest too deeply");
  for (const auto& builtin : preset_names()) {
    if (builtin == name) {
      ScenarioDocument doc;
      doc.preset = builtin;
      doc.link = preset_scenario(builtin);
      doc.network = network_from(doc.link, NetworkScenario{});
      return doc;
    }
  }
  const char* dir = std::getenv(kPresetDirEnv);
  if (dir != nullptr && *dir != '\0') {
    const std::filesystem::path path = std::filesystem::path(dir) / (std::string(name) + ".scn");
    std::ifstream in(path);
    if (in) {
      std::ostringstream buf;
      buf << in.rdbuf();
      ScenarioDocument doc = parse_document(buf.str(), {}, depth);
      doc.preset = std::string(name);
      return doc;
    }
  }
  throw InvalidArgument("unknown preset '" + std::string(name) + "'");
}

std::string value_text(const Field& f, ScenarioDocument& doc) {
  switch (f.type) {
    case Type::Number: {
      const std::string_view unit = canonical_unit(f.kind);
      std::string out = format_number(f.number(doc));
      if (!unit.empty()) out += " " + std::string(unit);
      return out;
    }
    case Type::Integer:
      return std::to_string(f.integer(doc));
    case Type::Seed:
      return std::to_string(f.seed(doc));
    case Type::Bool:
      return f.flag(doc) ? "true" : "false";
    case Type::Text:
      return "\"" + f.text(doc) + "\"";
    case Type::Env:
      return "\"" + std::string(to_string(f.environment(doc))) + "\"";
    case Type::Dir:
      return "\"" + std::string(to_string(f.direction(doc))) + "\"";
  }
  return {};
}

}  // namespace

NetworkScenario network_from(const LinkScenario& link, NetworkScenario network) {
  network.band = link.band;
  network.bs = link.bs;
  network.ue = link.ue;
  network.noise_figure_db = link.noise_figure_db;
  network.temperature_k = link.temperature_k;
  network.ple_los = link.ple_los;
  network.ple_nlos = link.ple_nlos;
  network.speed_of_light = link.speed_of_light;
  return network;
}

ScenarioDocument parse_scenario(std::string_view text, std::span<const std::string> overrides) {
  return parse_document(text, overrides, 0);
}

std::string serialize_scenario(const ScenarioDocument& document) {
  ScenarioDocument doc = document;
  std::string out;
  if (!doc.preset.empty()) out += "preset = \"" + doc.preset + "\"\n";
  for (auto section : kSections) {
    if (!out.empty()) out += "\n";
    out += "[" + std::string(section) + "]\n";
    for (const auto& f : fields()) {
      if (f.section != section) continue;
      out += std::string(f.key) + " = " + value_text(f, doc) + "\n";
    }
  }
  return out;
}

ScenarioDocument load_preset(std::string_view name) { return preset_document(name, 0); }

ScenarioDocument load_scenario_file(const std::string& path, std::span<const std::string> overrides) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), overrides);
}

}  // namespace cefkit
