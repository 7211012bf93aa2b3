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


#include <catch_amalgamated.hpp>

#include <algorithm>
#include <sstream>

#include "frdft/verify.hpp"

namespace verify = frdft::verify;

namespace {

std::string render(const verify::VerifyReport& report) {
  std::ostringstream out;
  verify::print_report(out, report);
  return out.str();
}

const verify::PropertyResult& find(const verify::VerifyReport& report, const std::string& name) {
  const auto it = std::find_if(report.properties.begin(), report.properties.end(),
                               [&](const auto& p) { return p.name == name; });
  REQUIRE(it != report.properties.end());
  return *it;
}

}  // namespace

TEST_CASE("verify suite passes on a small run", "[verify]") {
  verify::VerifyOptions options;
  options.max_n = 256;
  const auto report = verify::run_verify(options);
  INFO(render(report));
  REQUIRE(report.all_passed());
  REQUIRE(report.properties.size() == 16);
  REQUIRE(report.additivity.size() == 10);
  REQUIRE(find(report, "frdft.root_sum_odd_counterexample").worst > 0.1);
}

TEST_CASE("verify is deterministic for a fixed seed", "[verify]") {
  verify::VerifyOptions options;
  options.max_n = 64;
  options.seed = 12345;
  REQUIRE(render(verify::run_verify(options)) == render(verify::run_verify(options)));
}

TEST_CASE("corrupted normalization fails unitarity", "[verify]") {
  verify::VerifyOptions options;
  options.max_n = 64;
  options.corrupt_normalization = true;
  const auto report = verify::run_verify(options);
  REQUIRE_FALSE(report.all_passed());
  REQUIRE_FALSE(find(report, "core.unitarity").passed);
  const std::string text = render(report);
  REQUIRE_THAT(text, Catch::Matchers::ContainsSubstring("FAIL core.unitarity"));
  REQUIRE_THAT(text, Catch::Matchers::ContainsSubstring("RESULT FAIL"));
}
