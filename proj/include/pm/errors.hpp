// Copyright 2026 The Authors.
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

#ifndef PM_ERRORS_HPP_
#define PM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace pm {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments: unknown labels, overlapping sets, malformed names.
class InputError : public Error {
 public:
  using Error::Error;
};

// The rank table itself is malformed (wrong size, missing or extra
// subset entries). Distinct from an axiom violation.
class StructureError : public Error {
 public:
  using Error::Error;
};

// An operation-specific precondition does not hold (for example a
// 2-sum whose basepoint is not a point).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace pm

#endif  // PM_ERRORS_HPP_
