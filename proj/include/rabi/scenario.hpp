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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rabi/errors.hpp"
#include "rabi/evolution.hpp"
#include "rabi/ladder.hpp"

namespace rabi {

// A scenario file failed to parse or validate; the message names the
// offending field (or byte position for syntax errors).
struct ConfigError : Error {
  using Error::Error;
};

// Inclusive linear time grid: `steps` is the number of points, so steps = 1
// yields just {start}.
struct TimeGrid {
  double start = 0.0;
  double stop = 0.0;
  int steps = 1;

  std::vector<double> points() const;
};

struct OutputSpec {
  std::string format = "csv";  // "csv" | "json"
  std::string path = "-";      // "-" = standard output
  bool include_propagator = false;
};

// One simulation scenario, mirroring the JSON config schema field-for-field.
//
// Level structure comes from exactly one base form:
//   - "energies": explicit levels; drives default to resonance (omega_k =
//     E_k - E_{k-1}) unless "omegas" is also given, which sets the drive
//     frequencies literally and so can describe a detuned scenario.
//   - "E0" + "omegas": levels derived cumulatively from the drives,
//     resonant by construction; E0 defaults to 0 (a global phase only).
struct ScenarioConfig {
  int n = 0;
  std::optional<double> e0;
  std::optional<std::vector<double>> energies;
  std::optional<std::vector<double>> omegas;
  std::vector<double> phis;  // zeros when omitted
  std::vector<double> couplings;
  int initial_level = 0;
  TimeGrid time;
  Kernel kernel = Kernel::kAuto;
  bool normalize_initial = false;
  OutputSpec output;

  // Resolves the energies/omegas duality into a concrete model.
  LadderModel build_model() const;
};

// "auto" | "closed" | "spectral" -> Kernel; throws ConfigError otherwise.
Kernel parse_kernel(const std::string& name);

// Parse + validate a scenario from JSON text / from a file on disk.
// Unknown keys are errors (they are invariably typos).
ScenarioConfig parse_scenario(const std::string& json_text);
ScenarioConfig load_scenario(const std::string& path);

// Tabular renderers for a finished run. Both are locale-independent and
// deterministic: identical input produces byte-identical text.
//
// CSV: header `t,p0,...,p{n-1}[,reU00,imU00,...]`, one row per grid point,
// every value in scientific notation with 17 significant digits.
std::string render_csv(const TimeSeries& ts, bool include_propagator);

// JSON: { "meta": {n, kernel, seed?}, "rows": [{t, populations,
// propagator?}] } with the propagator flattened row-major into [re, im]
// pairs.
std::string render_json(const TimeSeries& ts, bool include_propagator,
                        const std::string& kernel,
                        std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace rabi
