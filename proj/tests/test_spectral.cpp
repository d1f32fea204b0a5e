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

#include "rabi/spectral.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "doctest.h"
#include "rabi/errors.hpp"
#include "rabi/ladder.hpp"

using namespace rabi;

namespace {

constexpr double kPi = 3.141592653589793;

// Residual of the eigen decomposition: max |C w_j - lambda_j w_j|.
double eigen_residual(const SymmetricTridiagonal& c, const SpectralDecomposition& d) {
  const int n = c.dim();
  double worst = 0.0;
  for (int j = 0; j < n; ++j) {
    for (int r = 0; r < n; ++r) {
      double cw = c.diagonal[static_cast<std::size_t>(r)] * d.W(r, j);
      if (r > 0) cw += c.off_diagonal[static_cast<std::size_t>(r - 1)] * d.W(r - 1, j);
      if (r < n - 1) cw += c.off_diagonal[static_cast<std::size_t>(r)] * d.W(r + 1, j);
      worst = std::max(worst,
                       std::abs(cw - d.eigenvalues[static_cast<std::size_t>(j)] * d.W(r, j)));
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("tridiag_eigen small exact cases") {
  SUBCASE("single coupling") {
    const SpectralDecomposition d = tridiag_eigen(coupling_matrix(CouplingVector({1.0})));
    CHECK(std::abs(d.eigenvalues[0] - 1.0) <= 1e-15);
    CHECK(std::abs(d.eigenvalues[1] + 1.0) <= 1e-15);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(d.W(0, 0) - r) <= 1e-14);
    CHECK(std::abs(d.W(1, 0) - r) <= 1e-14);
    CHECK(std::abs(d.W(0, 1) - r) <= 1e-14);
    CHECK(std::abs(d.W(1, 1) + r) <= 1e-14);
  }
  SUBCASE("zero matrix keeps the identity frame") {
    SymmetricTridiagonal c;
    c.diagonal.assign(4, 0.0);
    c.off_diagonal.assign(3, 0.0);
    const SpectralDecomposition d = tridiag_eigen(c);
    for (double lam : d.eigenvalues) CHECK(lam == 0.0);
    CHECK(max_abs_diff(d.W, RealMatrix::identity(4)) == 0.0);
  }
  SUBCASE("equal couplings follow the cosine ladder") {
    // Eigenvalues of the n-site chain with unit hops: 2 cos(k pi/(n+1)).
    const SpectralDecomposition d =
        tridiag_eigen(coupling_matrix(CouplingVector({1.0, 1.0, 1.0, 1.0})));
    const std::vector<double> expected = {std::sqrt(3.0), 1.0, 0.0, -1.0, -std::sqrt(3.0)};
    for (std::size_t k = 0; k < 5; ++k) {
      CHECK(std::abs(d.eigenvalues[k] - expected[k]) <= 1e-12);
      CHECK(std::abs(d.eigenvalues[k] - 2.0 * std::cos(kPi * static_cast<double>(k + 1) / 6.0)) <=
            1e-12);
    }
  }
  SUBCASE("seven levels, equal couplings") {
    const SpectralDecomposition d = tridiag_eigen(
        coupling_matrix(CouplingVector({2.0, 2.0, 2.0, 2.0, 2.0, 2.0})));
    for (std::size_t k = 0; k < 7; ++k)
      CHECK(std::abs(d.eigenvalues[k] -
                     4.0 * std::cos(kPi * static_cast<double>(k + 1) / 8.0)) <= 1e-11);
    CHECK(orthogonality_defect(d.W) <= 1e-12);
    CHECK(eigen_residual(coupling_matrix(CouplingVector({2.0, 2.0, 2.0, 2.0, 2.0, 2.0})), d) <=
          1e-11);
  }
}

TEST_CASE("tridiag_eigen determinism and ordering") {
  const SymmetricTridiagonal c = coupling_matrix(CouplingVector({0.3, 2.7, 1.1, 0.05, 4.0}));
  const SpectralDecomposition a = tridiag_eigen(c);
  const SpectralDecomposition b = tridiag_eigen(c);
  CHECK(a.eigenvalues == b.eigenvalues);
  CHECK(max_abs_diff(a.W, b.W) == 0.0);
  for (std::size_t k = 1; k < a.eigenvalues.size(); ++k)
    CHECK(a.eigenvalues[k - 1] >= a.eigenvalues[k]);
}

TEST_CASE("tridiag_eigen handles a degenerate pair") {
  // g = (1, 0, 1) has the doubly degenerate spectrum (1, 1, -1, -1).
  const SymmetricTridiagonal c = coupling_matrix(CouplingVector({1.0, 0.0, 1.0}));
  const SpectralDecomposition d = tridiag_eigen(c);
  CHECK(std::abs(d.eigenvalues[0] - 1.0) <= 1e-14);
  CHECK(std::abs(d.eigenvalues[1] - 1.0) <= 1e-14);
  CHECK(std::abs(d.eigenvalues[2] + 1.0) <= 1e-14);
  CHECK(std::abs(d.eigenvalues[3] + 1.0) <= 1e-14);
  CHECK(orthogonality_defect(d.W) <= 1e-12);
  CHECK(eigen_residual(c, d) <= 1e-12);

  const ComplexMatrix u = expm_spectral(c, 0.7);
  CHECK(max_abs_diff(u, expm_series(to_dense(c), 0.7)) <= 1e-11);
}

TEST_CASE("expm_spectral values") {
  SUBCASE("t = 0 is the identity") {
    const SymmetricTridiagonal c = coupling_matrix(CouplingVector({1.3, 0.2, 5.0}));
    CHECK(max_abs_diff(expm_spectral(c, 0.0), ComplexMatrix::identity(4)) <= 1e-15);
  }
  SUBCASE("matches the two-drive rotation") {
    const SymmetricTridiagonal c = coupling_matrix(CouplingVector({1.0, 1.0}));
    const double t = kPi / std::sqrt(2.0);
    ComplexMatrix expected(3);
    expected(0, 2) = -1.0;
    expected(1, 1) = -1.0;
    expected(2, 0) = -1.0;
    CHECK(max_abs_diff(expm_spectral(c, t), expected) <= 1e-12);
  }
  SUBCASE("matches the series") {
    const SymmetricTridiagonal c = coupling_matrix(CouplingVector({1.0, 2.0, 3.0}));
    CHECK(max_abs_diff(expm_spectral(c, 0.7), expm_series(to_dense(c), 0.7)) <= 1e-11);
  }
  SUBCASE("long-time, strong-coupling case stays unitary and accurate") {
    const SymmetricTridiagonal c =
        coupling_matrix(CouplingVector({2.0, 2.0, 2.0, 2.0, 2.0, 2.0}));
    const ComplexMatrix u = expm_spectral(c, 20.0);
    CHECK(unitarity_defect(u) <= 1e-12);
    CHECK(max_abs_diff(u, expm_series(to_dense(c), 20.0)) <= 1e-10);
  }
}

TEST_CASE("expm_series values") {
  SUBCASE("zero matrix") {
    CHECK(max_abs_diff(expm_series(ComplexMatrix(3), 1.7), ComplexMatrix::identity(3)) == 0.0);
  }
  SUBCASE("half turn about x") {
    // exp(-i (pi/2) X) = -i X for the Pauli matrix X.
    ComplexMatrix x(2);
    x(0, 1) = 1.0;
    x(1, 0) = 1.0;
    ComplexMatrix expected(2);
    expected(0, 1) = cplx(0.0, -1.0);
    expected(1, 0) = cplx(0.0, -1.0);
    CHECK(max_abs_diff(expm_series(x, kPi / 2.0), expected) <= 1e-13);
  }
  SUBCASE("rejects non-finite input") {
    ComplexMatrix bad(2);
    bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(expm_series(bad, 1.0), InvalidArgument);
  }
}

TEST_CASE("tridiag_eigen input validation") {
  SymmetricTridiagonal empty;
  CHECK_THROWS_AS(tridiag_eigen(empty), InvalidArgument);

  SymmetricTridiagonal mismatched;
  mismatched.diagonal.assign(3, 0.0);
  mismatched.off_diagonal.assign(3, 1.0);
  CHECK_THROWS_AS(tridiag_eigen(mismatched), InvalidArgument);
}
