// Copyright 2026 The rabisim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rabi/scenario.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rabi/text.hpp"

namespace rabi {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw ConfigError("config error: " + msg); }

void check_keys(const json& obj, const std::string& prefix,
                std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) fail("unknown field \"" + prefix + item.key() + "\"");
  }
}

double get_number(const json& j, const std::string& field) {
  if (!j.is_number()) fail("field \"" + field + "\" must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail("field \"" + field + "\" must be finite");
  return v;
}

int get_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) fail("field \"" + field + "\" must be an integer");
  return j.get<int>();
}

bool get_bool(const json& j, const std::string& field) {
  if (!j.is_boolean()) fail("field \"" + field + "\" must be a boolean");
  return j.get<bool>();
}

std::string get_string(const json& j, const std::string& field) {
  if (!j.is_string()) fail("field \"" + field + "\" must be a string");
  return j.get<std::string>();
}

std::vector<double> get_number_array(const json& j, const std::string& field, int expected) {
  if (!j.is_array()) fail("field \"" + field + "\" must be an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& elem : j) out.push_back(get_number(elem, field));
  if (expected >= 0 && static_cast<int>(out.size()) != expected)
    fail("field \"" + field + "\" must have " + std::to_string(expected) + " entries, got " +
         std::to_string(out.size()));
  return out;
}

}  // namespace

std::vector<double> TimeGrid::points() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps));
  if (steps == 1) {
    out.push_back(start);
    return out;
  }
  const double stride = (stop - start) / static_cast<double>(steps - 1);
  for (int i = 0; i < steps; ++i) out.push_back(start + stride * static_cast<double>(i));
  out.back() = stop;  // land on the endpoint exactly despite rounding
  return out;
}

Kernel parse_kernel(const std::string& name) {
  if (name == "auto") return Kernel::kAuto;
  if (name == "closed") return Kernel::kClosedForm;
  if (name == "spectral") return Kernel::kSpectral;
  fail("kernel must be one of auto|closed|spectral, got \"" + name + "\"");
}

LadderModel ScenarioConfig::build_model() const {
  std::vector<double> e;
  std::vector<double> w;
  if (energies) {
    e = *energies;
    if (omegas) {
      w = *omegas;
    } else {
      w.reserve(e.size() - 1);
      for (std::size_t k = 1; k < e.size(); ++k) w.push_back(e[k] - e[k - 1]);
    }
  } else {
    w = *omegas;
    e.resize(static_cast<std::size_t>(n));
    e[0] = e0.value_or(0.0);
    for (std::size_t k = 1; k < e.size(); ++k) e[k] = e[k - 1] + w[k - 1];
  }
  return LadderModel(std::move(e), std::move(w), phis, CouplingVector(couplings));
}

ScenarioConfig parse_scenario(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) fail("top level must be a JSON object");
  check_keys(root, "",
             {"n", "E0", "energies", "omegas", "phis", "couplings", "initial_level", "time",
              "kernel", "normalize_initial", "output"});

  ScenarioConfig cfg;
  if (!root.contains("n")) fail("missing required field \"n\"");
  cfg.n = get_int(root["n"], "n");
  if (cfg.n < 2) fail("\"n\" must be at least 2, got " + std::to_string(cfg.n));

  if (root.contains("E0")) cfg.e0 = get_number(root["E0"], "E0");
  if (root.contains("energies"))
    cfg.energies = get_number_array(root["energies"], "energies", cfg.n);
  if (root.contains("omegas")) cfg.omegas = get_number_array(root["omegas"], "omegas", cfg.n - 1);

  if (cfg.energies && cfg.e0)
    fail("\"E0\" conflicts with \"energies\" (the ground energy is energies[0])");
  if (!cfg.energies && !cfg.omegas) fail("one of \"energies\" or \"omegas\" is required");
  if (cfg.energies) {
    for (std::size_t k = 1; k < cfg.energies->size(); ++k)
      if (!((*cfg.energies)[k] > (*cfg.energies)[k - 1]))
        fail("\"energies\" must be strictly increasing");
  } else {
    for (double w : *cfg.omegas)
      if (!(w > 0.0)) fail("\"omegas\" entries must be positive when levels are derived from them");
  }

  if (!root.contains("couplings")) fail("missing required field \"couplings\"");
  cfg.couplings = get_number_array(root["couplings"], "couplings", cfg.n - 1);
  for (double g : cfg.couplings)
    if (g < 0.0) fail("\"couplings\" entries must be >= 0");

  cfg.phis.assign(static_cast<std::size_t>(cfg.n - 1), 0.0);
  if (root.contains("phis")) cfg.phis = get_number_array(root["phis"], "phis", cfg.n - 1);

  if (root.contains("initial_level")) {
    cfg.initial_level = get_int(root["initial_level"], "initial_level");
    if (cfg.initial_level < 0 || cfg.initial_level >= cfg.n)
      fail("\"initial_level\" must be in [0, " + std::to_string(cfg.n - 1) + "]");
  }

  if (!root.contains("time")) fail("missing required field \"time\"");
  const json& time = root["time"];
  if (!time.is_object()) fail("field \"time\" must be an object");
  check_keys(time, "time.", {"start", "stop", "steps"});
  for (const char* key : {"start", "stop", "steps"})
    if (!time.contains(key)) fail(std::string("missing required field \"time.") + key + "\"");
  cfg.time.start = get_number(time["start"], "time.start");
  cfg.time.stop = get_number(time["stop"], "time.stop");
  cfg.time.steps = get_int(time["steps"], "time.steps");
  if (cfg.time.steps < 1) fail("\"time.steps\" must be >= 1");
  if (cfg.time.start < 0.0) fail("\"time.start\" must be >= 0");
  if (cfg.time.stop < cfg.time.start) fail("\"time.stop\" must be >= \"time.start\"");
  if (cfg.time.steps > 1 && cfg.time.stop == cfg.time.start)
    fail("\"time.stop\" must exceed \"time.start\" when steps > 1");

  if (root.contains("kernel")) cfg.kernel = parse_kernel(get_string(root["kernel"], "kernel"));
  if (root.contains("normalize_initial"))
    cfg.normalize_initial = get_bool(root["normalize_initial"], "normalize_initial");

  if (root.contains("output")) {
    const json& output = root["output"];
    if (!output.is_object()) fail("field \"output\" must be an object");
    check_keys(output, "output.", {"format", "path", "include_propagator"});
    if (output.contains("format")) {
      cfg.output.format = get_string(output["format"], "output.format");
      if (cfg.output.format != "csv" && cfg.output.format != "json")
        fail("\"output.format\" must be \"csv\" or \"json\"");
    }
    if (output.contains("path")) {
      cfg.output.path = get_string(output["path"], "output.path");
      if (cfg.output.path.empty()) fail("\"output.path\" must not be empty");
    }
    if (output.contains("include_propagator"))
      cfg.output.include_propagator = get_bool(output["include_propagator"], "output.include_propagator");
  }

  return cfg;
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

std::string render_csv(const TimeSeries& ts, bool include_propagator) {
  if (include_propagator && ts.propagators.size() != ts.times.size())
    throw InvalidArgument("render_csv: propagators were not retained for this series");

  std::string out = "t";
  for (int k = 0; k < ts.levels; ++k) out += ",p" + std::to_string(k);
  if (include_propagator) {
    for (int i = 0; i < ts.levels; ++i)
      for (int j = 0; j < ts.levels; ++j) {
        const std::string ij = std::to_string(i) + std::to_string(j);
        out += ",reU" + ij + ",imU" + ij;
      }
  }
  out += "\n";

  for (std::size_t row = 0; row < ts.times.size(); ++row) {
    out += format_sci(ts.times[row], 17);
    for (double p : ts.populations[row]) out += "," + format_sci(p, 17);
    if (include_propagator) {
      const ComplexMatrix& u = ts.propagators[row];
      for (int i = 0; i < ts.levels; ++i)
        for (int j = 0; j < ts.levels; ++j) {
          out += "," + format_sci(u(i, j).real(), 17);
          out += "," + format_sci(u(i, j).imag(), 17);
        }
    }
    out += "\n";
  }
  return out;
}

std::string render_json(const TimeSeries& ts, bool include_propagator, const std::string& kernel,
                        std::optional<std::uint64_t> seed) {
  if (include_propagator && ts.propagators.size() != ts.times.size())
    throw InvalidArgument("render_json: propagators were not retained for this series");

  nlohmann::ordered_json doc;
  doc["meta"]["n"] = ts.levels;
  doc["meta"]["kernel"] = kernel;
  if (seed) doc["meta"]["seed"] = *seed;

  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t row = 0; row < ts.times.size(); ++row) {
    nlohmann::ordered_json entry;
    entry["t"] = ts.times[row];
    entry["populations"] = ts.populations[row];
    if (include_propagator) {
      nlohmann::ordered_json flat = nlohmann::ordered_json::array();
      const ComplexMatrix& u = ts.propagators[row];
      for (int i = 0; i < ts.levels; ++i)
        for (int j = 0; j < ts.levels; ++j)
          flat.push_back({u(i, j).real(), u(i, j).imag()});
      entry["propagator"] = std::move(flat);
    }
    rows.push_back(std::move(entry));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

}  // namespace rabi
