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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace frdft::verify {

struct VerifyOptions {
  // Largest N used by the size-swept properties.
  std::size_t max_n = 1024;
  std::uint64_t seed = 1;
  // Test hook: rescales the forward DFT seen by the core checks by (1 + 1e-3),
  // so the unitarity family must fail.
  bool corrupt_normalization = false;
};

struct PropertyResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;
  double tolerance = 0.0;
  // "<=" for deviation bounds, ">" for properties that demand a large value.
  std::string comparison = "<=";
};

struct AdditivitySample {
  double alpha = 0.0;
  double beta = 0.0;
  // max_jk |(F(alpha) F(beta))_jk - F(alpha + beta)_jk|
  double deviation = 0.0;
};

struct SmallAngleSample {
  std::size_t n = 0;
  // max_j |F(1e-6) x - x|_j for a random unit-energy x
  double deviation = 0.0;
};

struct VerifyReport {
  std::size_t max_n = 0;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties;
  std::vector<SmallAngleSample> small_angle;
  std::size_t additivity_n = 64;
  std::vector<AdditivitySample> additivity;

  bool all_passed() const;
};

/// Runs every asserted invariant of the core, fractional and time-frequency
/// modules, plus the unasserted additivity measurement. Fully determined by
/// `options`.
VerifyReport run_verify(const VerifyOptions& options);

// One line per property, the additivity samples, then a RESULT line.
void print_report(std::ostream& out, const VerifyReport& report);

}  // namespace frdft::verify
