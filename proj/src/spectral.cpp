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

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>

#include "rabi/errors.hpp"

namespace rabi {
namespace {

constexpr int kMaxSweepsPerEigenvalue = 30;

// One QL pass over d (diagonal) and e (off-diagonal, e[n-1] used as scratch),
// accumulating the rotations into z. Follows the tql2 lineage (Bowdler,
// Martin, Reinsch, Wilkinson; EISPACK).
void ql_implicit_shift(std::vector<double>& d, std::vector<double>& e, RealMatrix& z) {
  const int n = static_cast<int>(d.size());
  const double eps = std::numeric_limits<double>::epsilon();

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      // Look for a single negligible off-diagonal element to split the matrix.
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == kMaxSweepsPerEigenvalue)
          throw ConvergenceFailure("tridiag_eigen: QL iteration exceeded " +
                                   std::to_string(kMaxSweepsPerEigenvalue) +
                                   " sweeps for one eigenvalue");
        // Shift from the 2x2 block at l.
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        bool underflow = false;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            // Rotation annihilated prematurely; drop the shift and restart.
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (int k = 0; k < n; ++k) {
            f = z(k, i + 1);
            z(k, i + 1) = s * z(k, i) + c * f;
            z(k, i) = c * z(k, i) - s * f;
          }
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

// Modified Gram-Schmidt over a run of columns [first, last). The QL rotations
// already keep W orthogonal; this pass pins down columns inside a degenerate
// eigenvalue cluster where the individual directions are not unique.
void orthonormalize_columns(RealMatrix& w, int first, int last) {
  const int n = w.dim();
  for (int j = first; j < last; ++j) {
    for (int k = first; k < j; ++k) {
      double dot = 0.0;
      for (int i = 0; i < n; ++i) dot += w(i, k) * w(i, j);
      for (int i = 0; i < n; ++i) w(i, j) -= dot * w(i, k);
    }
    double nrm = 0.0;
    for (int i = 0; i < n; ++i) nrm += w(i, j) * w(i, j);
    nrm = std::sqrt(nrm);
    if (nrm > 0.0)
      for (int i = 0; i < n; ++i) w(i, j) /= nrm;
  }
}

}  // namespace

SpectralDecomposition tridiag_eigen(const SymmetricTridiagonal& c) {
  const int n = c.dim();
  if (n < 1) throw InvalidArgument("tridiag_eigen: dim must be >= 1");
  if (static_cast<int>(c.off_diagonal.size()) != n - 1)
    throw InvalidArgument("tridiag_eigen: off_diagonal must have dim-1 entries");

  std::vector<double> d = c.diagonal;
  std::vector<double> e(static_cast<std::size_t>(n), 0.0);
  std::copy(c.off_diagonal.begin(), c.off_diagonal.end(), e.begin());
  RealMatrix z = RealMatrix::identity(n);

  if (n > 1) ql_implicit_shift(d, e, z);

  // Sort descending; ties keep QL output order.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&d](int a, int b) { return d[static_cast<std::size_t>(a)] > d[static_cast<std::size_t>(b)]; });

  SpectralDecomposition dec;
  dec.eigenvalues.resize(static_cast<std::size_t>(n));
  dec.W = RealMatrix(n);
  for (int j = 0; j < n; ++j) {
    dec.eigenvalues[static_cast<std::size_t>(j)] = d[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])];
    for (int i = 0; i < n; ++i) dec.W(i, j) = z(i, order[static_cast<std::size_t>(j)]);
  }

  // Re-orthonormalize inside clusters of (numerically) equal eigenvalues.
  double scale = 1.0;
  for (double lam : dec.eigenvalues) scale = std::max(scale, std::abs(lam));
  const double cluster_tol = 1e-10 * scale;
  int run_start = 0;
  for (int j = 1; j <= n; ++j) {
    const bool split = (j == n) || (dec.eigenvalues[static_cast<std::size_t>(run_start)] -
                                        dec.eigenvalues[static_cast<std::size_t>(j)] >
                                    cluster_tol);
    if (split) {
      if (j - run_start > 1) orthonormalize_columns(dec.W, run_start, j);
      run_start = j;
    }
  }

  // Sign convention: first non-negligible entry of every eigenvector positive.
  for (int j = 0; j < n; ++j) {
    double colmax = 0.0;
    for (int i = 0; i < n; ++i) colmax = std::max(colmax, std::abs(dec.W(i, j)));
    for (int i = 0; i < n; ++i) {
      if (std::abs(dec.W(i, j)) > 1e-12 * colmax) {
        if (dec.W(i, j) < 0.0)
          for (int k = 0; k < n; ++k) dec.W(k, j) = -dec.W(k, j);
        break;
      }
    }
  }
  return dec;
}

ComplexMatrix expm_spectral(const SymmetricTridiagonal& c, double t) {
  const SpectralDecomposition dec = tridiag_eigen(c);
  const int n = c.dim();
  std::vector<cplx> phases(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m)
    phases[static_cast<std::size_t>(m)] =
        std::polar(1.0, -t * dec.eigenvalues[static_cast<std::size_t>(m)]);

  ComplexMatrix out(n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      cplx acc(0.0, 0.0);
      for (int m = 0; m < n; ++m)
        acc += dec.W(j, m) * phases[static_cast<std::size_t>(m)] * dec.W(k, m);
      out(j, k) = acc;
    }
  }
  return out;
}

ComplexMatrix expm_series(const ComplexMatrix& m, double t) {
  if (!all_finite(m)) throw InvalidArgument("expm_series: matrix has non-finite entries");
  const int n = m.dim();

  // G = -itM, scaled so ||G / 2^s||_1 <= 0.5.
  ComplexMatrix g(n);
  const cplx factor(0.0, -t);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = factor * m(i, j);

  int squarings = 0;
  const double nrm = one_norm(g);
  if (nrm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
  const double scale = std::ldexp(1.0, -squarings);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) *= scale;

  ComplexMatrix sum = ComplexMatrix::identity(n);
  ComplexMatrix term = ComplexMatrix::identity(n);
  constexpr int kMaxTerms = 80;  // ||G||_1 <= 0.5 converges far earlier
  for (int k = 1; k <= kMaxTerms; ++k) {
    term = term * g;
    const double inv = 1.0 / static_cast<double>(k);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) term(i, j) *= inv;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) sum(i, j) += term(i, j);
    if (one_norm(term) <= 1e-18 * one_norm(sum)) break;
  }

  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

}  // namespace rabi
