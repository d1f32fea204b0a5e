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

#include <optional>
#include <string>
#include <vector>

#include "rabi/ladder.hpp"
#include "rabi/matrix.hpp"

namespace rabi {

enum class Kernel { kAuto, kClosedForm, kSpectral };

std::string kernel_name(Kernel k);

struct PropagatorOptions {
  Kernel kernel = Kernel::kAuto;
  // With normalize_initial the propagator is right-multiplied by U(0)^dag so
  // it starts exactly at the identity; the default reproduces the literal
  // solution, whose value at t = 0 is V(0)^dag (not the identity when phases
  // are nonzero).
  bool normalize_initial = false;
  // Resonance tolerance; default derives from the model's energy scale.
  std::optional<double> resonance_tol;
};

// The concrete kernel an auto request resolves to: closed form for 2..5
// levels with a non-degenerate spectrum, spectral otherwise.
Kernel resolve_kernel(const LadderModel& model, Kernel requested);

// The full lab-frame propagator U(t) = e^{-itE0} V(t)^dag exp(-itC).
// Resonance is a hard precondition (throws NotResonant with the detuning
// report); the reduction to a time-independent coupling matrix does not hold
// off resonance.
ComplexMatrix propagator(const LadderModel& model, double t,
                         const PropagatorOptions& opts = {});

// Born-rule populations P_k = |U_{k,initial}|^2.
std::vector<double> populations(const ComplexMatrix& u, int initial);

// Per-time-point level populations, plus the full propagators on request.
struct TimeSeries {
  int levels = 0;
  std::vector<double> times;
  std::vector<std::vector<double>> populations;  // one row of `levels` entries per time
  std::vector<ComplexMatrix> propagators;        // empty unless requested
};

// Samples the propagator over an ascending non-negative grid; rows are ordered
// by the grid regardless of evaluation order.
TimeSeries time_series(const LadderModel& model, const std::vector<double>& grid,
                       int initial, const PropagatorOptions& opts = {},
                       bool keep_propagators = false);

// Max-norm residual of the Schrodinger equation i dU/dt = H U at time t,
// with dU/dt replaced by a central difference of step h (second order in h).
double schrodinger_residual(const LadderModel& model, double t, double h,
                            const PropagatorOptions& opts = {});

// Default central-difference step, balancing truncation against cancellation.
double default_fd_step(const LadderModel& model);

}  // namespace rabi
