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

#include <string>
#include <vector>

#include "rabi/errors.hpp"
#include "rabi/matrix.hpp"

namespace rabi {

// The n-1 nearest-neighbour coupling strengths g_1..g_{n-1} of an n-level
// ladder, in angular-frequency units (hbar = 1). All entries must be finite
// and >= 0; a sign can always be absorbed into the drive phase.
class CouplingVector {
 public:
  explicit CouplingVector(std::vector<double> g);

  int size() const { return static_cast<int>(g_.size()); }
  int levels() const { return size() + 1; }
  double operator[](int k) const { return g_[static_cast<std::size_t>(k)]; }
  const std::vector<double>& values() const { return g_; }
  bool all_zero() const;

 private:
  std::vector<double> g_;
};

// Real symmetric tridiagonal matrix. For the ladder coupling matrix the
// diagonal is identically zero and the off-diagonal carries g.
struct SymmetricTridiagonal {
  std::vector<double> diagonal;      // length n
  std::vector<double> off_diagonal;  // length n-1

  int dim() const { return static_cast<int>(diagonal.size()); }
};

SymmetricTridiagonal coupling_matrix(const CouplingVector& g);

ComplexMatrix to_dense(const SymmetricTridiagonal& m);

// Full physical scenario: n energy levels E_0 < E_1 < ... < E_{n-1} driven by
// n-1 lasers with angular frequencies omega_k and phases phi_k, each coupling
// levels k-1 <-> k with strength g_k.
class LadderModel {
 public:
  LadderModel(std::vector<double> energies, std::vector<double> omegas,
              std::vector<double> phis, CouplingVector couplings);

  // Resonant construction: omega_k = E_k - E_{k-1}.
  static LadderModel resonant(std::vector<double> energies, std::vector<double> phis,
                              CouplingVector couplings);

  int levels() const { return static_cast<int>(energies_.size()); }
  const std::vector<double>& energies() const { return energies_; }
  const std::vector<double>& omegas() const { return omegas_; }
  const std::vector<double>& phis() const { return phis_; }
  const CouplingVector& couplings() const { return couplings_; }

  double ground_energy() const { return energies_.front(); }

  // Delta_k = E_k - E_0 for k = 0..n-1 (Delta_0 = 0).
  std::vector<double> deltas() const;

  // Physical-realism advisory only: level gaps strictly decreasing up the
  // ladder. Violations never invalidate the math downstream.
  bool anharmonic_ordering() const;

 private:
  std::vector<double> energies_;
  std::vector<double> omegas_;
  std::vector<double> phis_;
  CouplingVector couplings_;
};

// Per-drive detunings delta_k = (Delta_k - Delta_{k-1}) - omega_k.
struct ResonanceReport {
  std::vector<double> detunings;  // index 0 holds drive k = 1
  double tol = 0.0;
  bool is_resonant = false;
  double max_abs_detuning = 0.0;
  int worst_drive = 0;  // 1-based drive index of the largest |detuning|

  std::string table() const;
};

// The propagator's reduction to a time-independent coupling matrix is only
// valid on resonance; callers that need the reduction refuse otherwise.
struct NotResonant : Error {
  explicit NotResonant(ResonanceReport r);
  ResonanceReport report;
};

// The n x n Hamiltonian at time t: diagonal E_k, super-diagonal
// g_k e^{i(omega_k t + phi_k)}, Hermitian by construction.
ComplexMatrix build_hamiltonian(const LadderModel& model, double t);

// The diagonal rotating-frame unitary V(t); entry (k,k) carries the
// accumulated drive phase sum_{j<=k}(omega_j t + phi_j), entry (0,0) = 1.
ComplexMatrix rotating_frame(const LadderModel& model, double t);

ResonanceReport resonance_report(const LadderModel& model, double tol);

// 1e-9 relative to the largest level spacing Delta_k, floored at 1e-9.
double default_resonance_tol(const LadderModel& model);

}  // namespace rabi
