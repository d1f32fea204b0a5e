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

#include <vector>

#include "rabi/ladder.hpp"
#include "rabi/matrix.hpp"

namespace rabi {

// Eigenvalues (sorted descending) and the orthogonal eigenvector matrix W of a
// real symmetric tridiagonal matrix; columns of W are the eigenvectors, with
// each column's first non-negligible entry made positive so the decomposition
// is unique outside degeneracies.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  RealMatrix W;
};

// Implicit-shift QL iteration with eigenvector accumulation (the classic
// EISPACK tql2 scheme). Deterministic: identical input gives bitwise-identical
// output. Throws ConvergenceFailure after 30 sweeps on one eigenvalue.
SpectralDecomposition tridiag_eigen(const SymmetricTridiagonal& c);

// exp(-itC) = W diag(e^{-it lambda_j}) W^T via tridiag_eigen.
ComplexMatrix expm_spectral(const SymmetricTridiagonal& c, double t);

// exp(-itM) by scaling-and-squaring with a truncated Taylor series; shares no
// code with the spectral route, so the two can serve as independent oracles
// for each other and for the closed forms.
ComplexMatrix expm_series(const ComplexMatrix& m, double t);

}  // namespace rabi
