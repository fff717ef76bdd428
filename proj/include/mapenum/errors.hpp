// Copyright 2026 The mapenum Authors.
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

namespace mapenum {

// Root of every error raised by the library. Callers that only care about
// "something in mapenum went wrong" catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidConstraint : public Error {
 public:
  using Error::Error;
};

class NonInvertibleSeries : public Error {
 public:
  NonInvertibleSeries() : Error("series has zero constant term and no multiplicative inverse") {}
};

class CompositionRequiresZeroConstant : public Error {
 public:
  CompositionRequiresZeroConstant()
      : Error("inner series of a composition must have zero constant term") {}
};

class NonInvertibleEpsilon : public Error {
 public:
  NonInvertibleEpsilon()
      : Error("Lagrange inversion needs 0 in the constraint so that e_P(0) = 1") {}
};

class ScaleMismatch : public Error {
 public:
  ScaleMismatch() : Error("series operands carry different rescaling factors") {}
};

class ConstraintNotAdmissible : public Error {
 public:
  using Error::Error;
};

class NoFunctionsOfThisSize : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace mapenum
