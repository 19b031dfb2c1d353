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


#include "cefkit/chain_dsl.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "cefkit/error.hpp"
#include "cefkit/link_budget.hpp"
#include "cefkit/units.hpp"
#include "cefkit/quantity.hpp"

namespace cefkit {
namespace {


struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based
};

struct Arg {
  std::string value;
  std::size_t key_column = 0;
  std::size_t value_column = 0;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    tokens.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return tokens;
}

class Line {
 public:
  Line(std::size_t number, std::vector<Token> tokens, std::size_t first_arg)
      : number_(number), keyword_column_(tokens.front().column) {
    std::string last_key;
    for (std::size_t i = first_arg; i < tokens.size(); ++i) {
      const Token& t = tokens[i];
      const auto eq = t.text.find('=');
      if (eq == std::string::npos) {
        // "loss=6 dB": a bare unit continues the previous value.
        if (!last_key.empty()) {
          args_[last_key].value += " " + t.text;
          last_key.clear();
          continue;
        }
        throw ParseError(number_, t.column, "expected key=value, got '" + t.text + "'");
      }
      const std::string key = t.text.substr(0, eq);
      if (key.empty()) throw ParseError(number_, t.column, "missing key before '='");
      if (args_.count(key) != 0) throw ParseError(number_, t.column, "duplicate key '" + key + "'");
      args_[key] = {t.text.substr(eq + 1), t.column, t.column + eq + 1};
      last_key = key;
    }
  }

  std::size_t number() const { return number_; }
  std::size_t column() const { return keyword_column_; }
  bool has(const std::string& key) const { return args_.count(key) != 0; }

  double quantity(const std::string& key, QuantityKind kind) {
    auto it = args_.find(key);
    if (it == args_.end()) throw ParseError(number_, keyword_column_, "missing " + key + "=");
    used_.push_back(key);
    try {
      return parse_quantity(it->second.value, kind);
    } catch (const QuantityError& e) {
      throw ParseError(number_, it->second.value_column + e.offset(), key + ": " + e.what());
    }
  }

  double quantity_or(const std::string& key, QuantityKind kind, double fallback) {
    return has(key) ? quantity(key, kind) : fallback;
  }

  std::size_t value_column(const std::string& key) const {
    auto it = args_.find(key);
    return it == args_.end() ? keyword_column_ : it->second.value_column;
  }

  // Rejects keys that were never read.
  void finish() const {
    for (const auto& [key, arg] : args_) {
      bool used = false;
      for (const auto& u : used_) used = used || u == key;
      if (!used) throw ParseError(number_, arg.key_column, "unexpected key '" + key + "'");
    }
  }

 private:
  std::size_t number_;
  std::size_t keyword_column_;
  std::map<std::string, Arg> args_;
  std::vector<std::string> used_;
};

enum class ItemType { Stage, Antenna, Channel };

struct Item {
  ItemType type = ItemType::Stage;
  std::size_t line = 0;
  std::size_t column = 0;
  std::optional<Component> stage;
  std::string label;
  // Antenna
  std::optional<double> gain_dbi;
  double area_m2 = 0.0;
  double efficiency = 0.0;
  std::optional<double> frequency_hz;
  std::optional<double> elements;
  std::size_t elements_column = 0;
  // Channel
  std::optional<double> path_loss_db;
  double channel_frequency_hz = 0.0;
};

void require_positive(double v, const Line& line, const std::string& key, const char* what) {
  if (!(v > 0.0)) throw ParseError(line.number(), line.value_column(key), key + ": " + what);
}

}  // namespace

ParsedChain parse_chain(std::string_view text) {
  std::vector<Item> items;
  std::vector<OffPathLoad> loads;
  std::optional<double> source_w;
  std::optional<std::size_t> channel_item;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

    std::vector<Token> tokens = tokenize(raw);
    if (tokens.empty()) continue;
    const std::string& keyword = tokens[0].text;
    const std::size_t kw_col = tokens[0].column;

    auto named = [&](const char* kind) -> std::string {
      if (tokens.size() < 2 || tokens[1].text.find('=') != std::string::npos) {
        throw ParseError(line_no, kw_col, std::string(kind) + " needs a name");
      }
      return tokens[1].text;
    };

    Item item;
    item.line = line_no;
    item.column = kw_col;

    if (keyword == "source") {
      Line line(line_no, tokens, 1);
      if (source_w) throw ParseError(line_no, kw_col, "source given more than once");
      if (!items.empty()) throw ParseError(line_no, kw_col, "source must come before every stage");
      source_w = line.quantity("power", QuantityKind::PowerWatts);
      require_positive(*source_w, line, "power", "must be > 0");
      line.finish();
      continue;
    }
    if (keyword == "load") {
      const std::string name = named("load");
      Line line(line_no, tokens, 2);
      const double p = line.quantity("power", QuantityKind::PowerWatts);
      if (p < 0.0) throw ParseError(line_no, line.value_column("power"), "power: must be >= 0");
      line.finish();
      loads.push_back({name, p});
      continue;
    }
    if (keyword == "passive") {
      item.label = named("passive");
      Line line(line_no, tokens, 2);
      const double loss_db = line.quantity("loss", QuantityKind::Decibel);
      if (loss_db < 0.0) {
        throw ParseError(line_no, line.value_column("loss"), "loss: must be >= 0 dB");
      }
      line.finish();
      item.stage = make_passive(db_to_linear(loss_db), item.label);
    } else if (keyword == "amp") {
      item.label = named("amp");
      Line line(line_no, tokens, 2);
      const double gain_db = line.quantity("gain", QuantityKind::Decibel);
      const double eta = line.quantity("eta", QuantityKind::Fraction);
      if (!(eta > 0.0) || eta > 1.0) {
        throw ParseError(line_no, line.value_column("eta"), "eta: must be in (0, 1]");
      }
      line.finish();
      item.stage = make_amplifier(db_to_linear(gain_db), eta, item.label);
    } else if (keyword == "lna") {
      item.label = named("lna");
      Line line(line_no, tokens, 2);
      const double gain_db = line.quantity("gain", QuantityKind::Decibel);
      const double fom = line.quantity("fom", QuantityKind::PerMilliwatt);
      require_positive(fom, line, "fom", "must be > 0");
      const double count = line.quantity_or("count", QuantityKind::Count, 1.0);
      require_positive(count, line, "count", "must be >= 1");
      line.finish();
      const double gain = db_to_linear(gain_db);
      item.stage = make_fixed_overhead(gain, count * 1e-3 * gain / fom, item.label);
    } else if (keyword == "antenna") {
      item.type = ItemType::Antenna;
      item.label = named("antenna");
      Line line(line_no, tokens, 2);
      if (line.has("gain")) {
        item.gain_dbi = line.quantity("gain", QuantityKind::Gain);
      } else {
        item.area_m2 = line.quantity("area", QuantityKind::Area);
        require_positive(item.area_m2, line, "area", "must be > 0");
        item.efficiency = line.quantity("eff", QuantityKind::Fraction);
        if (!(item.efficiency > 0.0) || item.efficiency > 1.0) {
          throw ParseError(line_no, line.value_column("eff"), "eff: must be in (0, 1]");
        }
        if (line.has("f")) {
          item.frequency_hz = line.quantity("f", QuantityKind::Frequency);
          require_positive(*item.frequency_hz, line, "f", "must be > 0");
        }
      }
      if (line.has("elements")) {
        item.elements = line.quantity("elements", QuantityKind::Count);
        item.elements_column = line.value_column("elements");
        require_positive(*item.elements, line, "elements", "must be >= 1");
      }
      line.finish();
    } else if (keyword == "channel") {
      item.type = ItemType::Channel;
      item.label = "channel";
      if (channel_item) {
        throw ParseError(line_no, kw_col,
                         "duplicate channel (first on line " + std::to_string(items[*channel_item].line) + ")");
      }
      const bool ci = tokens.size() >= 2 && tokens[1].text == "ci";
      Line line(line_no, tokens, ci ? 2 : 1);
      if (ci) {
        const double f = line.quantity("f", QuantityKind::Frequency);
        require_positive(f, line, "f", "must be > 0");
        const double d = line.quantity("d", QuantityKind::Length);
        const double n = line.quantity("n", QuantityKind::Real);
        require_positive(n, line, "n", "must be > 0");
        if (d < 1.0) throw ParseError(line_no, line.value_column("d"), "d: must be >= 1 m");
        item.channel_frequency_hz = f;
        item.path_loss_db = path_loss_ci_db({f, d, n, 1.0});
      } else {
        item.path_loss_db = line.quantity("pl", QuantityKind::Decibel);
        if (*item.path_loss_db < 0.0) {
          throw ParseError(line_no, line.value_column("pl"), "pl: must be >= 0 dB");
        }
      }
      line.finish();
      channel_item = items.size();
    } else {
      throw ParseError(line_no, kw_col, "unknown component '" + keyword + "'");
    }
    items.push_back(std::move(item));
  }

  // Fold the antennas next to the channel into a single over-the-air stage.
  std::size_t first = 0;
  std::size_t last = 0;
  if (channel_item) {
    first = *channel_item;
    while (first > 0 && items[first - 1].type == ItemType::Antenna) --first;
    last = *channel_item;
    while (last + 1 < items.size() && items[last + 1].type == ItemType::Antenna) ++last;
  }
  for (std::size_t i = 0; i < items.size(); ++i) {
    const bool folded = channel_item && i >= first && i <= last;
    if (items[i].type == ItemType::Antenna && !folded) {
      throw ParseError(items[i].line, items[i].column, "antenna must be adjacent to the channel");
    }
  }

  ParsedChain out;
  std::vector<Component> stages;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (channel_item && i >= first && i <= last) {
      if (i != *channel_item) continue;
      const Item& ch = items[i];
      double loss_db = *ch.path_loss_db;
      for (std::size_t a = first; a <= last; ++a) {
        if (a == i) continue;
        const Item& ant = items[a];
        if (ant.elements && a > i) {
          throw ParseError(ant.line, ant.elements_column, "elements= applies to the transmit antenna only");
        }
        double g = 0.0;
        if (ant.gain_dbi) {
          g = *ant.gain_dbi;
        } else {
          const double f = ant.frequency_hz.value_or(ch.channel_frequency_hz);
          if (!(f > 0.0)) {
            throw ParseError(ant.line, ant.column,
                             "antenna area needs a carrier frequency (f= here or channel ci f=)");
          }
          g = aperture_gain_dbi({ant.area_m2, ant.efficiency}, f);
        }
        loss_db -= g;
        if (ant.elements) loss_db += linear_to_db(*ant.elements);
      }
      if (loss_db < 0.0) {
        throw ParseError(ch.line, ch.column, "over-the-air stage has net gain; check antenna gains and path loss");
      }
      out.channel_index = stages.size();
      stages.push_back(make_passive(db_to_linear(loss_db), first == last ? "channel" : "air link"));
      out.stage_lines.push_back(ch.line);
      continue;
    }
    stages.push_back(*items[i].stage);
    out.stage_lines.push_back(items[i].line);
  }
  if (stages.empty()) throw ParseError(line_no, 0, "chain has no stages");

  out.cascade = Cascade(std::move(stages), source_w.value_or(1e-3), std::move(loads));
  return out;
}

ParsedChain load_chain_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read chain file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_chain(buf.str());
}

}  // namespace cefkit
