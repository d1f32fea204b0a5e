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

#include <array>

#include "rabi/ladder.hpp"
#include "rabi/matrix.hpp"

// Exact analytic evaluation of exp(-itC) for ladders with 2..5 levels. Each
// exponential is a complex symmetric unitary built from at most two real
// oscillation frequencies: the largest eigenvalue lambda of C and its partner
// lambda2 (g1 g3 / lambda for n = 4, sqrt(B) / lambda for n = 5).
//
// The analytic eigenvector normalizers X and Y are genuinely singular where
// eigenvalues collide, so near-degenerate couplings are refused with
// DegenerateSpectrum instead of patched; callers fall back to the spectral
// route, which has no such restriction.

namespace rabi {

// Relative threshold below which the analytic spectrum is treated as
// degenerate: X or Y would amplify roundoff past the closed-form error
// budget, so these inputs are refused in favor of the numeric route.
inline constexpr double kDegeneracyEps = 1e-8;

// Eigenstructure of the 4-level coupling matrix. Full spectrum is
// {lambda, lambda2, -lambda2, -lambda} with lambda = (sqrt(A)+sqrt(B))/2.
struct QuarticSpectrum4 {
  double lambda = 0.0;   // largest eigenvalue, > 0
  double lambda2 = 0.0;  // g1 g3 / lambda, >= 0
  double A = 0.0;        // g2^2 + (g1+g3)^2
  double B = 0.0;        // g2^2 + (g1-g3)^2
  double X = 0.0;        // normalizer of the |+-lambda> eigenvectors
  double Y = 0.0;        // normalizer of the |+-lambda2> eigenvectors

  std::array<double, 4> eigenvalues() const { return {lambda, lambda2, -lambda2, -lambda}; }
};

// Eigenstructure of the 5-level coupling matrix. Full spectrum is
// {lambda, lambda2, 0, -lambda2, -lambda}; zero is always an eigenvalue.
struct QuinticSpectrum5 {
  double lambda = 0.0;   // (sqrt(A+2 sqrt(B)) + sqrt(A-2 sqrt(B))) / 2
  double lambda2 = 0.0;  // sqrt(B) / lambda
  double A = 0.0;        // g1^2 + g2^2 + g3^2 + g4^2
  double B = 0.0;        // g1^2 g3^2 + g1^2 g4^2 + g2^2 g4^2
  double X = 0.0;
  double Y = 0.0;

  std::array<double, 5> eigenvalues() const {
    return {lambda, lambda2, 0.0, -lambda2, -lambda};
  }
};

// exp(-itC) for the 2-level ladder: cosine on the diagonal, -i sine off it.
ComplexMatrix expc2(double g1, double t);

// exp(-itC) for the 3-level ladder; single frequency sqrt(g1^2+g2^2).
// g1 = g2 = 0 returns the identity.
ComplexMatrix expc3(double g1, double g2, double t);

// Requires |g| = 3. Throws AllZeroCouplings / DegenerateSpectrum.
QuarticSpectrum4 spectrum4(const CouplingVector& g);

// Requires |g| = 4. Throws AllZeroCouplings / DegenerateSpectrum.
QuinticSpectrum5 spectrum5(const CouplingVector& g);

// exp(-itC) for the 4-level ladder from spectrum4.
ComplexMatrix expc4(const CouplingVector& g, double t);

// exp(-itC) for the 5-level ladder from spectrum5.
ComplexMatrix expc5(const CouplingVector& g, double t);

// Orthogonal eigenvector matrices (columns ordered by descending eigenvalue,
// matching spectrum4/spectrum5).
RealMatrix eigenvectors4(const QuarticSpectrum4& sp, const CouplingVector& g);
RealMatrix eigenvectors5(const QuinticSpectrum5& sp, const CouplingVector& g);

// Dispatch on ladder size: |g| = 1..4 -> expc2..expc5. Throws InvalidArgument
// for larger ladders (no algebraic closed form exists for n >= 6).
ComplexMatrix closed_form_exp(const CouplingVector& g, double t);

}  // namespace rabi
