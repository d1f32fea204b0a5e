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

#include "rabi/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <utility>

namespace rabi {

CouplingVector::CouplingVector(std::vector<double> g) : g_(std::move(g)) {
  if (g_.empty()) throw ModelInvalid("CouplingVector: need at least one coupling (n >= 2)");
  for (std::size_t k = 0; k < g_.size(); ++k) {
    if (!std::isfinite(g_[k]))
      throw ModelInvalid("CouplingVector: g_" + std::to_string(k + 1) + " is not finite");
    if (g_[k] < 0.0)
      throw ModelInvalid("CouplingVector: g_" + std::to_string(k + 1) +
                         " is negative; absorb the sign into the phase phi_" +
                         std::to_string(k + 1));
  }
}

bool CouplingVector::all_zero() const {
  return std::all_of(g_.begin(), g_.end(), [](double v) { return v == 0.0; });
}

SymmetricTridiagonal coupling_matrix(const CouplingVector& g) {
  SymmetricTridiagonal c;
  c.diagonal.assign(static_cast<std::size_t>(g.levels()), 0.0);
  c.off_diagonal = g.values();
  return c;
}

ComplexMatrix to_dense(const SymmetricTridiagonal& m) {
  const int n = m.dim();
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i) out(i, i) = m.diagonal[static_cast<std::size_t>(i)];
  for (int i = 0; i + 1 < n; ++i) {
    out(i, i + 1) = m.off_diagonal[static_cast<std::size_t>(i)];
    out(i + 1, i) = m.off_diagonal[static_cast<std::size_t>(i)];
  }
  return out;
}

LadderModel::LadderModel(std::vector<double> energies, std::vector<double> omegas,
                         std::vector<double> phis, CouplingVector couplings)
    : energies_(std::move(energies)),
      omegas_(std::move(omegas)),
      phis_(std::move(phis)),
      couplings_(std::move(couplings)) {
  const std::size_t n = energies_.size();
  if (n < 2) throw ModelInvalid("LadderModel: need at least two levels");
  if (omegas_.size() != n - 1 || phis_.size() != n - 1 ||
      couplings_.values().size() != n - 1) {
    throw ModelInvalid("LadderModel: omegas, phis and couplings must all have n-1 entries");
  }
  for (double e : energies_)
    if (!std::isfinite(e)) throw ModelInvalid("LadderModel: non-finite energy");
  for (double w : omegas_)
    if (!std::isfinite(w)) throw ModelInvalid("LadderModel: non-finite drive frequency");
  for (double p : phis_)
    if (!std::isfinite(p)) throw ModelInvalid("LadderModel: non-finite phase");
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!(energies_[k] < energies_[k + 1]))
      throw ModelInvalid("LadderModel: energies must be strictly increasing (E_" +
                         std::to_string(k) + " >= E_" + std::to_string(k + 1) + ")");
  }
}

LadderModel LadderModel::resonant(std::vector<double> energies, std::vector<double> phis,
                                  CouplingVector couplings) {
  std::vector<double> omegas;
  omegas.reserve(energies.size() > 0 ? energies.size() - 1 : 0);
  for (std::size_t k = 0; k + 1 < energies.size(); ++k)
    omegas.push_back(energies[k + 1] - energies[k]);
  return LadderModel(std::move(energies), std::move(omegas), std::move(phis),
                     std::move(couplings));
}

std::vector<double> LadderModel::deltas() const {
  std::vector<double> d(energies_.size());
  for (std::size_t k = 0; k < energies_.size(); ++k) d[k] = energies_[k] - energies_[0];
  return d;
}

bool LadderModel::anharmonic_ordering() const {
  for (std::size_t k = 0; k + 2 < energies_.size(); ++k) {
    const double gap_lo = energies_[k + 1] - energies_[k];
    const double gap_hi = energies_[k + 2] - energies_[k + 1];
    if (!(gap_lo > gap_hi)) return false;
  }
  return true;
}

NotResonant::NotResonant(ResonanceReport r)
    : Error("model is not resonant: max |detuning| = " +
            std::to_string(r.max_abs_detuning) + " exceeds tol = " + std::to_string(r.tol)),
      report(std::move(r)) {}

ComplexMatrix build_hamiltonian(const LadderModel& model, double t) {
  const int n = model.levels();
  ComplexMatrix h(n);
  for (int k = 0; k < n; ++k) h(k, k) = model.energies()[static_cast<std::size_t>(k)];
  for (int k = 0; k + 1 < n; ++k) {
    const double g = model.couplings()[k];
    const double arg = model.omegas()[static_cast<std::size_t>(k)] * t +
                       model.phis()[static_cast<std::size_t>(k)];
    const cplx off = g * std::polar(1.0, arg);
    h(k, k + 1) = off;
    h(k + 1, k) = std::conj(off);
  }
  return h;
}

ComplexMatrix rotating_frame(const LadderModel& model, double t) {
  const int n = model.levels();
  ComplexMatrix v(n);
  v(0, 0) = cplx(1.0, 0.0);
  double omega_sum = 0.0;
  double phi_sum = 0.0;
  for (int k = 1; k < n; ++k) {
    omega_sum += model.omegas()[static_cast<std::size_t>(k - 1)];
    phi_sum += model.phis()[static_cast<std::size_t>(k - 1)];
    v(k, k) = std::polar(1.0, omega_sum * t + phi_sum);
  }
  return v;
}

ResonanceReport resonance_report(const LadderModel& model, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("resonance_report: tol must be > 0");
  ResonanceReport rep;
  rep.tol = tol;
  const auto& e = model.energies();
  for (std::size_t k = 0; k + 1 < e.size(); ++k) {
    // (Delta_k - Delta_{k-1}) - omega_k == (E_k - E_{k-1}) - omega_k
    const double delta = (e[k + 1] - e[k]) - model.omegas()[k];
    rep.detunings.push_back(delta);
    if (std::abs(delta) > rep.max_abs_detuning) {
      rep.max_abs_detuning = std::abs(delta);
      rep.worst_drive = static_cast<int>(k) + 1;
    }
  }
  rep.is_resonant = rep.max_abs_detuning <= tol;
  return rep;
}

double default_resonance_tol(const LadderModel& model) {
  double max_delta = 0.0;
  for (double d : model.deltas()) max_delta = std::max(max_delta, std::abs(d));
  return 1e-9 * std::max(1.0, max_delta);
}

std::string ResonanceReport::table() const {
  std::ostringstream os;
  os << "drive   detuning\n";
  for (std::size_t k = 0; k < detunings.size(); ++k) {
    os << "k=" << (k + 1) << "    " << detunings[k];
    if (static_cast<int>(k) + 1 == worst_drive && !is_resonant) os << "   <-- worst";
    os << "\n";
  }
  return os.str();
}

}  // namespace rabi
