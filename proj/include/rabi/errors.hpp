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

#include <stdexcept>
#include <string>

namespace rabi {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A model violates one of its construction invariants (lengths, ordering, signs).
struct ModelInvalid : Error {
  using Error::Error;
};

// Generic bad call argument (unsorted grid, nonpositive step, ...).
struct InvalidArgument : Error {
  using Error::Error;
};

// The closed-form route cannot be evaluated for these couplings; callers fall
// back to the spectral route.
struct ClosedFormUnavailable : Error {
  using Error::Error;
};

// Two closed-form eigenvalues (nearly) coincide, so the analytic normalizers
// X, Y are (nearly) singular.
struct DegenerateSpectrum : ClosedFormUnavailable {
  using ClosedFormUnavailable::ClosedFormUnavailable;
};

// All couplings vanish; exp(-itC) is the identity but the closed-form
// eigenstructure is undefined (A = 0).
struct AllZeroCouplings : ClosedFormUnavailable {
  using ClosedFormUnavailable::ClosedFormUnavailable;
};

// The iterative eigensolver exceeded its sweep budget.
struct ConvergenceFailure : Error {
  using Error::Error;
};

struct NotUnitary : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

}  // namespace rabi
