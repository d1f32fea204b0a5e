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
#include <string>
#include <vector>

namespace rabi {

// One property of the battery: pass iff max_defect <= tolerance over all
// draws. worst_draw / worst_case pin down the offending inputs so a failure
// can be replayed from (seed, draw index) alone.
struct PropertyResult {
  std::string name;
  double tolerance = 0.0;
  double max_defect = 0.0;
  long long draws = 0;
  long long worst_draw = -1;
  std::string worst_case;
  std::string note;

  bool pass() const { return max_defect <= tolerance; }
};

struct VerifyReport {
  std::uint64_t seed = 0;
  int draws = 0;
  std::vector<PropertyResult> properties;

  bool all_pass() const;
};

// Closed-form battery (per ladder size 3, 4, 5): unitarity, agreement with
// the series exponential, group law, determinant, complex symmetry,
// characteristic-polynomial residuals, eigenvalue product identities,
// eigenvector orthonormality, spectrum symmetry, degenerate rejection rate.
std::vector<PropertyResult> closed_form_suite(std::uint64_t seed, int draws);

// Numeric-path battery over n in {2..8}: spectral-vs-series agreement,
// unitarity of both, spectrum symmetry about zero, solver determinism.
std::vector<PropertyResult> spectral_suite(std::uint64_t seed, int draws);

// Full-propagator battery on random resonant models: unitarity, closed-vs-
// spectral kernel independence, phase invariance and global-energy-shift
// covariance of populations, population row sums and bounds.
std::vector<PropertyResult> evolution_suite(std::uint64_t seed, int draws);

// Central-difference residual of the Schrodinger equation: second-order
// convergence ratio and absolute magnitude at h = 1e-5.
std::vector<PropertyResult> schrodinger_suite(std::uint64_t seed, int draws);

// Everything above under one seed; what `verify` runs.
VerifyReport run_property_battery(std::uint64_t seed, int draws);

// Fixed-layout text report; byte-identical for identical (seed, draws).
std::string format_report(const VerifyReport& rep);

}  // namespace rabi
