/*
 Copyright 2026 The dahamod Authors
 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#pragma once

#include <stdexcept>
#include <string>

namespace dahamod {

// Base for every error raised by the library. The C API maps each subclass
// onto a distinct status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic outside the domain of an operation (zero to a negative power,
// division by zero, malformed scalar text).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A caller broke a documented precondition: wrong parity, mismatched
// dimensions, a parameter constraint that does not hold.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

// Two computations that must agree did not. Always a bug in a transcription
// or in the library, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// classify() could not certify its reconstruction with an intertwiner.
class ClassificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace dahamod
