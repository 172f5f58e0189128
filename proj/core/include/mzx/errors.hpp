// Copyright 2026 The mzx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace mzx {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A state or factor whose squared norm is not 1 within tolerance.
class NormalizationError : public Error {
  public:
    using Error::Error;
};

/// An operator used in a role its verified properties do not allow,
/// e.g. applying a non-unitary or taking the expectation of a non-Hermitian.
class KindError : public Error {
  public:
    using Error::Error;
};

/// Floating residue above tolerance where an exact identity is expected.
class NumericalError : public Error {
  public:
    using Error::Error;
};

/// Mixing input-side {t, r} and output-side {t', r'} amplitudes.
class BasisSideError : public Error {
  public:
    using Error::Error;
};

/// An internal convention bug: a quantity that must vanish identically did not.
class ConsistencyError : public Error {
  public:
    using Error::Error;
};

class ArgumentError : public Error {
  public:
    using Error::Error;
};

}  // namespace mzx
