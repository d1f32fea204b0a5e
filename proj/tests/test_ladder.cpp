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

#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "rabi/errors.hpp"
#include "rabi/rng.hpp"

using namespace rabi;

namespace {

constexpr double kPi = 3.141592653589793;

LadderModel three_level() {
  return LadderModel::resonant({0.0, 1.0, 1.8}, {0.0, 0.0}, CouplingVector({1.0, 2.0}));
}

// Random model with strictly increasing energies and arbitrary (possibly
// detuned, possibly negative) drive frequencies; all entries within [-10, 10].
LadderModel random_model(Rng& rng) {
  const int n = rng.uniform_int(2, 6);
  std::vector<double> e(static_cast<std::size_t>(n));
  e[0] = rng.uniform(-10.0, 0.0);
  for (int k = 1; k < n; ++k)
    e[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(k - 1)] + rng.uniform(0.1, 3.0);
  std::vector<double> w(static_cast<std::size_t>(n - 1));
  std::vector<double> p(static_cast<std::size_t>(n - 1));
  std::vector<double> g(static_cast<std::size_t>(n - 1));
  for (double& x : w) x = rng.uniform(-10.0, 10.0);
  for (double& x : p) x = rng.uniform(-kPi, kPi);
  for (double& x : g) x = rng.uniform(0.0, 10.0);
  return LadderModel(e, w, p, CouplingVector(g));
}

}  // namespace

TEST_CASE("CouplingVector validation") {
  CHECK_THROWS_AS(CouplingVector({}), ModelInvalid);
  CHECK_THROWS_AS(CouplingVector({1.0, -0.5}), ModelInvalid);
  CHECK_THROWS_AS(CouplingVector({std::numeric_limits<double>::quiet_NaN()}), ModelInvalid);
  const CouplingVector g({1.0, 0.0, 2.0});
  CHECK(g.size() == 3);
  CHECK(g.levels() == 4);
  CHECK(g[1] == 0.0);
  CHECK_FALSE(g.all_zero());
  CHECK(CouplingVector({0.0, 0.0}).all_zero());
}

TEST_CASE("coupling_matrix shapes") {
  SUBCASE("single coupling") {
    const ComplexMatrix c = to_dense(coupling_matrix(CouplingVector({1.0})));
    CHECK(c.dim() == 2);
    CHECK(c(0, 0) == cplx(0.0));
    CHECK(c(0, 1) == cplx(1.0));
    CHECK(c(1, 0) == cplx(1.0));
    CHECK(c(1, 1) == cplx(0.0));
  }
  SUBCASE("tridiagonal structure") {
    const SymmetricTridiagonal c = coupling_matrix(CouplingVector({1.0, 2.0, 3.0}));
    CHECK(c.dim() == 4);
    for (double d : c.diagonal) CHECK(d == 0.0);
    CHECK(c.off_diagonal == std::vector<double>{1.0, 2.0, 3.0});
    const ComplexMatrix dense = to_dense(c);
    CHECK(dense(0, 2) == cplx(0.0));
    CHECK(dense(2, 1) == cplx(2.0));
  }
  SUBCASE("all-zero couplings give the zero matrix") {
    const ComplexMatrix c = to_dense(coupling_matrix(CouplingVector({0.0, 0.0})));
    CHECK(max_abs(c) == 0.0);
  }
}

TEST_CASE("LadderModel construction rules") {
  CHECK_THROWS_AS(LadderModel({0.0}, {}, {}, CouplingVector({1.0})), ModelInvalid);
  CHECK_THROWS_AS(LadderModel({0.0, 1.0}, {1.0, 2.0}, {0.0}, CouplingVector({1.0})),
                  ModelInvalid);
  CHECK_THROWS_AS(LadderModel({0.0, 0.0}, {0.0}, {0.0}, CouplingVector({1.0})), ModelInvalid);
  CHECK_THROWS_AS(LadderModel({1.0, 0.5}, {-0.5}, {0.0}, CouplingVector({1.0})), ModelInvalid);
  CHECK_THROWS_AS(
      LadderModel({0.0, std::numeric_limits<double>::infinity()}, {1.0}, {0.0},
                  CouplingVector({1.0})),
      ModelInvalid);

  const LadderModel m = three_level();
  CHECK(m.levels() == 3);
  CHECK(m.ground_energy() == 0.0);
  CHECK(m.omegas() == std::vector<double>{1.0, 0.8});
  CHECK(m.deltas() == std::vector<double>{0.0, 1.0, 1.8});
}

TEST_CASE("anharmonic ordering advisory") {
  CHECK(LadderModel::resonant({0.0, 5.0, 9.0, 12.0}, {0.0, 0.0, 0.0},
                              CouplingVector({1.0, 1.0, 1.0}))
            .anharmonic_ordering());
  CHECK_FALSE(LadderModel::resonant({0.0, 1.0, 3.0}, {0.0, 0.0}, CouplingVector({1.0, 1.0}))
                  .anharmonic_ordering());
  // Two levels: no gap pair to compare, trivially ordered.
  CHECK(LadderModel::resonant({0.0, 1.0}, {0.0}, CouplingVector({1.0})).anharmonic_ordering());
}

TEST_CASE("build_hamiltonian matches direct substitution") {
  SUBCASE("two levels at t=0, zero phase") {
    const LadderModel m({0.0, 1.0}, {1.0}, {0.0}, CouplingVector({0.5}));
    const ComplexMatrix h = build_hamiltonian(m, 0.0);
    CHECK(std::abs(h(0, 0) - cplx(0.0)) == 0.0);
    CHECK(std::abs(h(0, 1) - cplx(0.5)) == 0.0);
    CHECK(std::abs(h(1, 0) - cplx(0.5)) == 0.0);
    CHECK(std::abs(h(1, 1) - cplx(1.0)) == 0.0);
  }
  SUBCASE("all-zero couplings leave only the level energies") {
    const LadderModel m = LadderModel::resonant({0.0, 1.0, 1.8}, {0.3, -0.2},
                                                CouplingVector({0.0, 0.0}));
    const ComplexMatrix h = build_hamiltonian(m, 2.7);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j)
          CHECK(h(i, j) == cplx(m.energies()[static_cast<std::size_t>(i)]));
        else
          CHECK(h(i, j) == cplx(0.0));
      }
  }
  SUBCASE("phase enters the off-diagonal") {
    const LadderModel m({0.0, 1.0, 1.8}, {1.0, 0.8}, {kPi / 2.0, 0.0},
                        CouplingVector({1.0, 2.0}));
    const ComplexMatrix h = build_hamiltonian(m, 0.0);
    CHECK(std::abs(h(0, 1) - cplx(0.0, 1.0)) <= 1e-15);  // 1 * e^{i pi/2} = i
    CHECK(std::abs(h(1, 2) - cplx(2.0, 0.0)) <= 1e-15);
    CHECK(h(0, 2) == cplx(0.0));
  }
}

TEST_CASE("Hamiltonian is Hermitian for random models") {
  Rng rng(101);
  for (int i = 0; i < 50; ++i) {
    const LadderModel m = random_model(rng);
    const double t = rng.uniform(0.0, 20.0);
    const ComplexMatrix h = build_hamiltonian(m, t);
    CHECK(hermiticity_defect(h) <= 1e-14 * std::max(1.0, max_abs(h)));
  }
}

TEST_CASE("Hamiltonian factors through the rotating frame") {
  // H(t) = V(t)^dag (E0 1 + D + C) V(t) with D = diag(Delta_k), for any
  // drive frequencies, resonant or not.
  Rng rng(202);
  for (int i = 0; i < 50; ++i) {
    const LadderModel m = random_model(rng);
    // Accumulated phase arguments grow like sum(omega) * t; keep them small
    // enough that argument rounding stays under the 1e-12 agreement budget.
    const double t = rng.uniform(0.0, 2.0);
    const int n = m.levels();

    ComplexMatrix core = to_dense(coupling_matrix(m.couplings()));
    const std::vector<double> deltas = m.deltas();
    for (int k = 0; k < n; ++k)
      core(k, k) += m.ground_energy() + deltas[static_cast<std::size_t>(k)];

    const ComplexMatrix v = rotating_frame(m, t);
    const ComplexMatrix rhs = adjoint(v) * core * v;
    CHECK(max_abs_diff(build_hamiltonian(m, t), rhs) <= 1e-12);
  }
}

TEST_CASE("rotating_frame values and unitarity") {
  SUBCASE("identity at t=0 with zero phases") {
    const LadderModel m = three_level();
    CHECK(max_abs_diff(rotating_frame(m, 0.0), ComplexMatrix::identity(3)) == 0.0);
  }
  SUBCASE("cumulative frequency sums") {
    const LadderModel m({0.0, 2.0, 5.0}, {2.0, 3.0}, {0.0, 0.0}, CouplingVector({1.0, 1.0}));
    const ComplexMatrix v = rotating_frame(m, 1.0);
    CHECK(std::abs(v(0, 0) - cplx(1.0)) == 0.0);
    CHECK(std::abs(v(1, 1) - std::polar(1.0, 2.0)) <= 1e-15);
    CHECK(std::abs(v(2, 2) - std::polar(1.0, 5.0)) <= 1e-15);
    CHECK(v(0, 1) == cplx(0.0));
  }
  SUBCASE("phase-only entry") {
    const LadderModel m({0.0, 1.0}, {1.0}, {kPi}, CouplingVector({1.0}));
    const ComplexMatrix v = rotating_frame(m, 0.0);
    CHECK(std::abs(v(1, 1) - cplx(-1.0, 0.0)) <= 1e-15);
  }
  SUBCASE("unitary for random models") {
    Rng rng(303);
    for (int i = 0; i < 30; ++i) {
      const LadderModel m = random_model(rng);
      CHECK(unitarity_defect(rotating_frame(m, rng.uniform(0.0, 20.0))) <= 1e-14);
    }
  }
}

TEST_CASE("resonance_report semantics") {
  SUBCASE("resonant by construction") {
    const ResonanceReport rep = resonance_report(three_level(), 1e-9);
    CHECK(rep.is_resonant);
    CHECK(rep.max_abs_detuning == 0.0);
    CHECK(rep.detunings == std::vector<double>{0.0, 0.0});
  }
  SUBCASE("explicit detuning on drive 2") {
    const LadderModel m({0.0, 1.0, 1.8}, {1.0, 0.9}, {0.0, 0.0}, CouplingVector({1.0, 1.0}));
    const ResonanceReport rep = resonance_report(m, 1e-9);
    CHECK_FALSE(rep.is_resonant);
    CHECK(rep.worst_drive == 2);
    CHECK(rep.detunings[0] == 0.0);
    CHECK(rep.detunings[1] == doctest::Approx(-0.1).epsilon(1e-12));
    CHECK(rep.table().find("k=2") != std::string::npos);
  }
  SUBCASE("detuning below tolerance counts as resonant") {
    const LadderModel m({0.0, 2.0}, {2.0 + 1e-12}, {0.0}, CouplingVector({1.0}));
    CHECK(resonance_report(m, 1e-9).is_resonant);
  }
  SUBCASE("tolerance must be positive") {
    CHECK_THROWS_AS(resonance_report(three_level(), 0.0), InvalidArgument);
  }
}

TEST_CASE("default resonance tolerance scales with the level span") {
  const LadderModel wide = LadderModel::resonant({0.0, 2.0, 3.5}, {0.0, 0.0},
                                                 CouplingVector({1.0, 1.0}));
  CHECK(default_resonance_tol(wide) == 1e-9 * 3.5);
  const LadderModel narrow = LadderModel::resonant({0.0, 0.25}, {0.0}, CouplingVector({1.0}));
  CHECK(default_resonance_tol(narrow) == 1e-9);  // floored at the unit scale
}
