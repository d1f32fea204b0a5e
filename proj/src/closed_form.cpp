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

#include "rabi/closed_form.hpp"

#include <cmath>
#include <complex>

#include "rabi/errors.hpp"

namespace rabi {
namespace {

const cplx kMinusI(0.0, -1.0);

// The entries a_ij are symmetric (a_ij = a_ji, no conjugation): build the
// upper triangle and mirror.
void mirror_upper(ComplexMatrix& m) {
  for (int i = 0; i < m.dim(); ++i)
    for (int j = i + 1; j < m.dim(); ++j) m(j, i) = m(i, j);
}

// (y + s)/2 and (y - s)/2 for s >= |y| > 0, where k = s^2 - y^2 is supplied
// in a product form that does not cancel. The direct difference loses most
// of its digits when y approaches -s (resp. +s); the conjugate branch keeps
// full relative accuracy there.
double half_sum(double s, double y, double k) {
  return y >= 0.0 ? 0.5 * (y + s) : 0.5 * (k / (s - y));
}

double half_diff(double s, double y, double k) {
  return y <= 0.0 ? 0.5 * (y - s) : -0.5 * (k / (y + s));
}

// Eigenvalue gaps dl = lambda^2 - g1^2 and dg = g3^2 - lambda^2 of the
// quartic spectrum. Uses AB - (g2^2+g3^2-g1^2)^2 = 4 g1^2 g2^2 and the
// 1 <-> 3 mirrored identity to sidestep the cancellation at lambda ~ g1
// (resp. lambda ~ g3).
struct QuarticGaps {
  double dl;
  double dg;
};

QuarticGaps quartic_gaps(double g1s, double g2s, double g3s, double a, double b) {
  const double sab = std::sqrt(a) * std::sqrt(b);
  const double dl = half_sum(sab, g2s + g3s - g1s, 4.0 * g1s * g2s);
  const double lg3 = half_sum(sab, g1s + g2s - g3s, 4.0 * g2s * g3s);
  return {dl, -lg3};
}

// sqrt(A^2 - 4B) of the quintic spectrum via the sum-of-squares identity
// A^2 - 4B = (g1^2+g2^2-g3^2-g4^2)^2 + 4 g2^2 g3^2.
double quintic_gap_d(double g1s, double g2s, double g3s, double g4s) {
  const double split = g1s + g2s - g3s - g4s;
  return std::sqrt(split * split + 4.0 * g2s * g3s);
}

// Gap quantities p = lambda^2 - ..., q = lambda2^2 - ... of the quintic
// spectrum, via D^2 - (A-2g1^2)^2 = 4 g2^2 (g1^2 - g4^2) and
// D^2 - (A-2g1^2-2g2^2)^2 = 4 g2^2 g3^2.
struct QuinticGaps {
  double p1;   // lambda^2  - g1^2
  double p12;  // lambda^2  - g1^2 - g2^2
  double q1;   // lambda2^2 - g1^2
  double q12;  // lambda2^2 - g1^2 - g2^2
};

QuinticGaps quintic_gaps(double g1s, double g2s, double g3s, double g4s) {
  const double d = quintic_gap_d(g1s, g2s, g3s, g4s);
  const double w1 = g2s + g3s + g4s - g1s;
  const double w12 = g3s + g4s - g1s - g2s;
  const double k1 = 4.0 * g2s * (g1s - g4s);
  const double k12 = 4.0 * g2s * g3s;
  return {half_sum(d, w1, k1), half_sum(d, w12, k12), half_diff(d, w1, k1),
          half_diff(d, w12, k12)};
}

}  // namespace

ComplexMatrix expc2(double g1, double t) {
  if (g1 < 0.0) throw ModelInvalid("expc2: coupling must be >= 0");
  const double c = std::cos(g1 * t);
  const double s = std::sin(g1 * t);
  ComplexMatrix m(2);
  m(0, 0) = c;
  m(0, 1) = kMinusI * s;
  m(1, 1) = c;
  mirror_upper(m);
  return m;
}

ComplexMatrix expc3(double g1, double g2, double t) {
  if (g1 < 0.0 || g2 < 0.0) throw ModelInvalid("expc3: couplings must be >= 0");
  const double omega_sq = g1 * g1 + g2 * g2;
  if (omega_sq == 0.0) return ComplexMatrix::identity(3);
  const double omega = std::sqrt(omega_sq);
  const double c = std::cos(omega * t);
  const double s = std::sin(omega * t);

  ComplexMatrix m(3);
  m(0, 0) = (g1 * g1 * c + g2 * g2) / omega_sq;
  m(0, 1) = kMinusI * (g1 * s / omega);
  m(0, 2) = g1 * g2 * (c - 1.0) / omega_sq;
  m(1, 1) = c;
  m(1, 2) = kMinusI * (g2 * s / omega);
  m(2, 2) = (g2 * g2 * c + g1 * g1) / omega_sq;
  mirror_upper(m);
  return m;
}

QuarticSpectrum4 spectrum4(const CouplingVector& g) {
  if (g.size() != 3) throw InvalidArgument("spectrum4: need exactly 3 couplings");
  const double g1 = g[0], g2 = g[1], g3 = g[2];

  QuarticSpectrum4 sp;
  sp.A = g2 * g2 + (g1 + g3) * (g1 + g3);
  sp.B = g2 * g2 + (g1 - g3) * (g1 - g3);
  if (sp.A == 0.0) throw AllZeroCouplings("spectrum4: all couplings vanish");

  const double sqrt_a = std::sqrt(sp.A);
  const double sqrt_b = std::sqrt(sp.B);
  // sqrt(B) -> 0 collapses lambda2 onto lambda.
  if (sqrt_b <= kDegeneracyEps * sqrt_a)
    throw DegenerateSpectrum("spectrum4: sqrt(B) ~ 0 (lambda ~ lambda2)");

  sp.lambda = 0.5 * (sqrt_a + sqrt_b);
  // Equivalent to (sqrt(A)-sqrt(B))/2 but immune to the cancellation there.
  sp.lambda2 = g1 * g3 / sp.lambda;

  // Normalizer radicands as the squared norms of the polynomial eigenvectors
  // (g1 g2, lambda g2, dl, g3 dl / lambda) and the lambda2 counterpart: every
  // term is non-negative, so no digits cancel.
  const double l2 = sp.lambda * sp.lambda;
  const QuarticGaps gap = quartic_gaps(g1 * g1, g2 * g2, g3 * g3, sp.A, sp.B);
  const double rad_x =
      g2 * g2 * (g1 * g1 + l2) + gap.dl * gap.dl * (1.0 + g3 * g3 / l2);
  const double rad_y =
      g2 * g2 * (l2 + g3 * g3) + gap.dg * gap.dg * (1.0 + g1 * g1 / l2);
  const double floor = kDegeneracyEps * sp.A * sp.A;
  if (rad_x <= floor) throw DegenerateSpectrum("spectrum4: X normalizer radicand ~ 0");
  if (rad_y <= floor) throw DegenerateSpectrum("spectrum4: Y normalizer radicand ~ 0");
  sp.X = 1.0 / std::sqrt(rad_x);
  sp.Y = 1.0 / std::sqrt(rad_y);
  return sp;
}

QuinticSpectrum5 spectrum5(const CouplingVector& g) {
  if (g.size() != 4) throw InvalidArgument("spectrum5: need exactly 4 couplings");
  const double g1 = g[0], g2 = g[1], g3 = g[2], g4 = g[3];
  const double g1s = g1 * g1, g2s = g2 * g2, g3s = g3 * g3, g4s = g4 * g4;

  QuinticSpectrum5 sp;
  sp.A = g1s + g2s + g3s + g4s;
  sp.B = g1s * g3s + g1s * g4s + g2s * g4s;
  if (sp.A == 0.0) throw AllZeroCouplings("spectrum5: all couplings vanish");
  // B -> 0 collapses lambda2 onto the permanent zero eigenvalue.
  if (sp.B <= kDegeneracyEps * sp.A * sp.A)
    throw DegenerateSpectrum("spectrum5: B ~ 0 (lambda2 ~ 0)");

  const double sqrt_b = std::sqrt(sp.B);
  const double d = quintic_gap_d(g1s, g2s, g3s, g4s);  // sqrt(A^2 - 4B)
  // A - 2 sqrt(B) = (lambda - lambda2)^2, in conjugate form: the direct
  // difference cancels exactly where the gap test needs accuracy.
  const double inner = d * d / (sp.A + 2.0 * sqrt_b);
  if (inner <= kDegeneracyEps * sp.A)
    throw DegenerateSpectrum("spectrum5: A ~ 2 sqrt(B) (lambda ~ lambda2)");

  sp.lambda = std::sqrt(0.5 * (sp.A + d));
  sp.lambda2 = sqrt_b / sp.lambda;

  // Normalizer radicands as the squared norms of the polynomial eigenvectors
  // (g1 g2 g3, lambda g2 g3, g3 p1, lambda p12, g4 p12) and the lambda2
  // counterpart scaled by lambda: every term is non-negative, so no digits
  // cancel.
  const double l2 = sp.lambda * sp.lambda;
  const double m2 = sp.lambda2 * sp.lambda2;
  const QuinticGaps gap = quintic_gaps(g1s, g2s, g3s, g4s);
  const double g23s = g2s * g3s;
  const double rad_x =
      (g1s + l2) * g23s + g3s * gap.p1 * gap.p1 + (l2 + g4s) * gap.p12 * gap.p12;
  const double rad_y = l2 * ((g1s + m2) * g23s + g3s * gap.q1 * gap.q1 +
                             (m2 + g4s) * gap.q12 * gap.q12);
  const double floor = kDegeneracyEps * sp.A * sp.A * sp.A;
  if (rad_x <= floor) throw DegenerateSpectrum("spectrum5: X normalizer radicand ~ 0");
  if (rad_y <= l2 * floor)
    throw DegenerateSpectrum("spectrum5: Y normalizer radicand ~ 0");
  sp.X = 1.0 / std::sqrt(rad_x);
  sp.Y = 1.0 / std::sqrt(rad_y);
  return sp;
}

ComplexMatrix expc4(const CouplingVector& g, double t) {
  const QuarticSpectrum4 sp = spectrum4(g);
  const double g1 = g[0], g2 = g[1], g3 = g[2];
  const double l = sp.lambda;
  const double l2 = l * l;
  const double x2 = sp.X * sp.X;
  const double y2 = sp.Y * sp.Y;

  const double cos_l = std::cos(l * t);
  const double sin_l = std::sin(l * t);
  const double cos_m = std::cos(sp.lambda2 * t);
  const double sin_m = std::sin(sp.lambda2 * t);

  const QuarticGaps gap = quartic_gaps(g1 * g1, g2 * g2, g3 * g3, sp.A, sp.B);
  const double dl = gap.dl;  // lambda^2 - g1^2
  const double dg = gap.dg;  // g3^2 - lambda^2

  ComplexMatrix m(4);
  m(0, 0) = 2.0 * g2 * g2 * (g1 * g1 * x2 * cos_l + l2 * y2 * cos_m);
  m(0, 1) = kMinusI * 2.0 * l * g2 * g2 * (g1 * x2 * sin_l + g3 * y2 * sin_m);
  m(0, 2) = 2.0 * g1 * g2 * (dl * x2 * cos_l + dg * y2 * cos_m);
  m(0, 3) = kMinusI * 2.0 * g2 *
            (g1 * g3 * dl / l * x2 * sin_l + l * dg * y2 * sin_m);
  m(1, 1) = 2.0 * g2 * g2 * (l2 * x2 * cos_l + g3 * g3 * y2 * cos_m);
  m(1, 2) = kMinusI * 2.0 * g2 *
            (l * dl * x2 * sin_l + g1 * g3 * dg / l * y2 * sin_m);
  m(1, 3) = 2.0 * g2 * g3 * (dl * x2 * cos_l + dg * y2 * cos_m);
  m(2, 2) = 2.0 * (dl * dl * x2 * cos_l + g1 * g1 * dg * dg / l2 * y2 * cos_m);
  m(2, 3) = kMinusI * (2.0 / l) *
            (g3 * dl * dl * x2 * sin_l + g1 * dg * dg * y2 * sin_m);
  m(3, 3) = 2.0 * (g3 * g3 * dl * dl / l2 * x2 * cos_l + dg * dg * y2 * cos_m);
  mirror_upper(m);
  return m;
}

ComplexMatrix expc5(const CouplingVector& g, double t) {
  const QuinticSpectrum5 sp = spectrum5(g);
  const double g1 = g[0], g2 = g[1], g3 = g[2], g4 = g[3];
  const double l = sp.lambda;
  const double l2 = l * l;
  const double b = sp.B;
  const double sqrt_b = std::sqrt(b);
  const double x2 = sp.X * sp.X;
  const double y2 = sp.Y * sp.Y;

  const double cos_l = std::cos(l * t);
  const double sin_l = std::sin(l * t);
  const double cos_m = std::cos(sp.lambda2 * t);
  const double sin_m = std::sin(sp.lambda2 * t);

  const QuinticGaps gap = quintic_gaps(g1 * g1, g2 * g2, g3 * g3, g4 * g4);
  const double p1 = gap.p1;    // lambda^2  - g1^2
  const double p12 = gap.p12;  // lambda^2  - g1^2 - g2^2
  const double q1 = gap.q1;    // lambda2^2 - g1^2
  const double q12 = gap.q12;  // lambda2^2 - g1^2 - g2^2

  ComplexMatrix m(5);
  m(0, 0) = g2 * g2 * g4 * g4 / b +
            2.0 * g1 * g1 * g2 * g2 * g3 * g3 * (x2 * cos_l + l2 * y2 * cos_m);
  m(0, 1) = kMinusI * 2.0 * l * g1 * g2 * g2 * g3 * g3 *
            (x2 * sin_l + sqrt_b * y2 * sin_m);
  m(0, 2) = -g1 * g2 * g4 * g4 / b +
            2.0 * g1 * g2 * g3 * g3 * (p1 * x2 * cos_l + l2 * q1 * y2 * cos_m);
  m(0, 3) = kMinusI * 2.0 * l * g1 * g2 * g3 *
            (p12 * x2 * sin_l + sqrt_b * q12 * y2 * sin_m);
  m(0, 4) = g1 * g2 * g3 * g4 *
            (1.0 / b + 2.0 * p12 * x2 * cos_l + 2.0 * l2 * q12 * y2 * cos_m);
  m(1, 1) = 2.0 * g2 * g2 * g3 * g3 * (l2 * x2 * cos_l + b * y2 * cos_m);
  m(1, 2) = kMinusI * 2.0 * l * g2 * g3 * g3 *
            (p1 * x2 * sin_l + sqrt_b * q1 * y2 * sin_m);
  m(1, 3) = 2.0 * g2 * g3 * (l2 * p12 * x2 * cos_l + b * q12 * y2 * cos_m);
  m(1, 4) = kMinusI * 2.0 * l * g2 * g3 * g4 *
            (p12 * x2 * sin_l + sqrt_b * q12 * y2 * sin_m);
  m(2, 2) = g1 * g1 * g4 * g4 / b +
            2.0 * g3 * g3 * (p1 * p1 * x2 * cos_l + l2 * q1 * q1 * y2 * cos_m);
  m(2, 3) = kMinusI * 2.0 * l * g3 *
            (p1 * p12 * x2 * sin_l + sqrt_b * q1 * q12 * y2 * sin_m);
  m(2, 4) = -g1 * g1 * g3 * g4 / b +
            2.0 * g3 * g4 * (p1 * p12 * x2 * cos_l + l2 * q1 * q12 * y2 * cos_m);
  m(3, 3) = 2.0 * l2 * p12 * p12 * x2 * cos_l + 2.0 * b * q12 * q12 * y2 * cos_m;
  m(3, 4) = kMinusI * 2.0 * l * g4 *
            (p12 * p12 * x2 * sin_l + sqrt_b * q12 * q12 * y2 * sin_m);
  m(4, 4) = g1 * g1 * g3 * g3 / b +
            2.0 * g4 * g4 * (p12 * p12 * x2 * cos_l + l2 * q12 * q12 * y2 * cos_m);
  mirror_upper(m);
  return m;
}

RealMatrix eigenvectors4(const QuarticSpectrum4& sp, const CouplingVector& g) {
  if (g.size() != 3) throw InvalidArgument("eigenvectors4: need exactly 3 couplings");
  const double g1 = g[0], g2 = g[1], g3 = g[2];
  const double l = sp.lambda;
  const QuarticGaps gap = quartic_gaps(g1 * g1, g2 * g2, g3 * g3, sp.A, sp.B);
  const double dl = gap.dl;
  const double dg = gap.dg;

  RealMatrix w(4);
  // |lambda> and |-lambda>
  w(0, 0) = g1 * g2 * sp.X;
  w(1, 0) = l * g2 * sp.X;
  w(2, 0) = dl * sp.X;
  w(3, 0) = g3 * dl / l * sp.X;
  w(0, 3) = w(0, 0);
  w(1, 3) = -w(1, 0);
  w(2, 3) = w(2, 0);
  w(3, 3) = -w(3, 0);
  // |lambda2> and |-lambda2>
  w(0, 1) = l * g2 * sp.Y;
  w(1, 1) = g2 * g3 * sp.Y;
  w(2, 1) = g1 * dg / l * sp.Y;
  w(3, 1) = dg * sp.Y;
  w(0, 2) = -w(0, 1);
  w(1, 2) = w(1, 1);
  w(2, 2) = -w(2, 1);
  w(3, 2) = w(3, 1);
  return w;
}

RealMatrix eigenvectors5(const QuinticSpectrum5& sp, const CouplingVector& g) {
  if (g.size() != 4) throw InvalidArgument("eigenvectors5: need exactly 4 couplings");
  const double g1 = g[0], g2 = g[1], g3 = g[2], g4 = g[3];
  const double l = sp.lambda;
  const double sqrt_b = std::sqrt(sp.B);
  const QuinticGaps gap = quintic_gaps(g1 * g1, g2 * g2, g3 * g3, g4 * g4);
  const double p1 = gap.p1;
  const double p12 = gap.p12;
  const double q1 = gap.q1;
  const double q12 = gap.q12;

  RealMatrix w(5);
  // |lambda> and |-lambda>
  w(0, 0) = g1 * g2 * g3 * sp.X;
  w(1, 0) = l * g2 * g3 * sp.X;
  w(2, 0) = p1 * g3 * sp.X;
  w(3, 0) = l * p12 * sp.X;
  w(4, 0) = p12 * g4 * sp.X;
  w(0, 4) = w(0, 0);
  w(1, 4) = -w(1, 0);
  w(2, 4) = w(2, 0);
  w(3, 4) = -w(3, 0);
  w(4, 4) = w(4, 0);
  // |lambda2> and |-lambda2>
  w(0, 1) = l * g1 * g2 * g3 * sp.Y;
  w(1, 1) = sqrt_b * g2 * g3 * sp.Y;
  w(2, 1) = l * g3 * q1 * sp.Y;
  w(3, 1) = sqrt_b * q12 * sp.Y;
  w(4, 1) = l * g4 * q12 * sp.Y;
  w(0, 3) = -w(0, 1);
  w(1, 3) = w(1, 1);
  w(2, 3) = -w(2, 1);
  w(3, 3) = w(3, 1);
  w(4, 3) = -w(4, 1);
  // the zero-eigenvalue vector
  w(0, 2) = g2 * g4 / sqrt_b;
  w(1, 2) = 0.0;
  w(2, 2) = -g1 * g4 / sqrt_b;
  w(3, 2) = 0.0;
  w(4, 2) = g1 * g3 / sqrt_b;
  return w;
}

ComplexMatrix closed_form_exp(const CouplingVector& g, double t) {
  switch (g.size()) {
    case 1:
      return expc2(g[0], t);
    case 2:
      return expc3(g[0], g[1], t);
    case 3:
      return expc4(g, t);
    case 4:
      return expc5(g, t);
    default:
      throw InvalidArgument("closed_form_exp: no algebraic closed form for n >= 6");
  }
}

}  // namespace rabi
