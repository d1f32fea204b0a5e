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

#include "rabi/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "rabi/closed_form.hpp"
#include "rabi/errors.hpp"
#include "rabi/spectral.hpp"

namespace rabi {

std::string kernel_name(Kernel k) {
  switch (k) {
    case Kernel::kAuto:
      return "auto";
    case Kernel::kClosedForm:
      return "closed";
    case Kernel::kSpectral:
      return "spectral";
  }
  return "?";
}

Kernel resolve_kernel(const LadderModel& model, Kernel requested) {
  if (requested != Kernel::kAuto) return requested;
  const CouplingVector& g = model.couplings();
  switch (g.size()) {
    case 1:
    case 2:
      return Kernel::kClosedForm;  // never degenerate (all-zero handled analytically)
    case 3:
      try {
        spectrum4(g);
        return Kernel::kClosedForm;
      } catch (const ClosedFormUnavailable&) {
        return Kernel::kSpectral;
      }
    case 4:
      try {
        spectrum5(g);
        return Kernel::kClosedForm;
      } catch (const ClosedFormUnavailable&) {
        return Kernel::kSpectral;
      }
    default:
      return Kernel::kSpectral;
  }
}

ComplexMatrix propagator(const LadderModel& model, double t, const PropagatorOptions& opts) {
  const double tol = opts.resonance_tol.value_or(default_resonance_tol(model));
  const ResonanceReport rep = resonance_report(model, tol);
  if (!rep.is_resonant) throw NotResonant(rep);

  const Kernel kernel = resolve_kernel(model, opts.kernel);
  ComplexMatrix u = (kernel == Kernel::kClosedForm)
                        ? closed_form_exp(model.couplings(), t)
                        : expm_spectral(coupling_matrix(model.couplings()), t);

  // Left-multiply by e^{-itE0} V(t)^dag: V is diagonal, so scale row k by the
  // conjugate accumulated drive phase.
  const ComplexMatrix v = rotating_frame(model, t);
  const cplx global = std::polar(1.0, -t * model.ground_energy());
  const int n = model.levels();
  for (int k = 0; k < n; ++k) {
    const cplx row_phase = global * std::conj(v(k, k));
    for (int j = 0; j < n; ++j) u(k, j) *= row_phase;
  }

  if (opts.normalize_initial) {
    // U(0) = V(0)^dag, so U(t) U(0)^dag scales column l by the phase-sum
    // entry of V(0).
    const ComplexMatrix v0 = rotating_frame(model, 0.0);
    for (int j = 0; j < n; ++j) {
      const cplx col_phase = v0(j, j);
      for (int k = 0; k < n; ++k) u(k, j) *= col_phase;
    }
  }
  return u;
}

std::vector<double> populations(const ComplexMatrix& u, int initial) {
  if (initial < 0 || initial >= u.dim())
    throw IndexOutOfRange("populations: initial level " + std::to_string(initial) +
                          " outside [0, " + std::to_string(u.dim()) + ")");
  const double defect = unitarity_defect(u);
  if (!(defect <= 1e-8))
    throw NotUnitary("populations: propagator unitarity defect " + std::to_string(defect));
  std::vector<double> p(static_cast<std::size_t>(u.dim()));
  for (int k = 0; k < u.dim(); ++k) p[static_cast<std::size_t>(k)] = std::norm(u(k, initial));
  return p;
}

TimeSeries time_series(const LadderModel& model, const std::vector<double>& grid,
                       int initial, const PropagatorOptions& opts, bool keep_propagators) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 0.0) throw InvalidArgument("time_series: grid times must be non-negative");
    if (i > 0 && grid[i] < grid[i - 1])
      throw InvalidArgument("time_series: grid must be sorted ascending");
  }
  TimeSeries ts;
  ts.levels = model.levels();
  ts.times = grid;
  ts.populations.reserve(grid.size());
  if (keep_propagators) ts.propagators.reserve(grid.size());
  for (double t : grid) {
    ComplexMatrix u = propagator(model, t, opts);
    ts.populations.push_back(populations(u, initial));
    if (keep_propagators) ts.propagators.push_back(std::move(u));
  }
  return ts;
}

double schrodinger_residual(const LadderModel& model, double t, double h,
                            const PropagatorOptions& opts) {
  if (!(h > 0.0)) throw InvalidArgument("schrodinger_residual: h must be > 0");
  if (t - h < 0.0) throw InvalidArgument("schrodinger_residual: need t - h >= 0");

  // The equation is linear and holds for the literal U regardless of U(0).
  PropagatorOptions local = opts;
  local.normalize_initial = false;

  const ComplexMatrix u_plus = propagator(model, t + h, local);
  const ComplexMatrix u_minus = propagator(model, t - h, local);
  const ComplexMatrix u = propagator(model, t, local);
  const ComplexMatrix hu = build_hamiltonian(model, t) * u;

  const int n = model.levels();
  const cplx i_over_2h(0.0, 1.0 / (2.0 * h));
  double defect = 0.0;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const cplx res = i_over_2h * (u_plus(r, c) - u_minus(r, c)) - hu(r, c);
      defect = std::max(defect, std::abs(res));
    }
  return defect;
}

double default_fd_step(const LadderModel& model) {
  const double h_max = max_abs(build_hamiltonian(model, 0.0));
  return 1e-5 * std::max(1.0, 1.0 / std::max(h_max, 1e-300));
}

}  // namespace rabi
