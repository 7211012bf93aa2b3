// Copyright 2026 The frdft Authors
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

namespace frdft {

// Base for every error the library raises on bad input or unusable parameters.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Empty signals, dimension mismatches, zero-energy inputs, malformed files.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Angle too close to the tan(alpha/2) singularity for the raw chirp path.
class ConditioningError : public Error {
 public:
  ConditioningError(const std::string& what, double bound)
      : Error(what), bound_(bound) {}
  double bound() const noexcept { return bound_; }

 private:
  double bound_;
};

// Requested work exceeds a configured size cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Root-sum phase requested for odd N, where shift invariance does not hold.
class UnsupportedParity : public Error {
 public:
  using Error::Error;
};

}  // namespace frdft
