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

#include "frdft/core.hpp"
#include "frdft/errors.hpp"
#include "test_support.hpp"

using frdft::Complex;
using frdft::Signal;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

void require_close(const Signal& got, const Signal& want, double tol) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    INFO("index " << i << " got " << got[i] << " want " << want[i]);
    REQUIRE(std::abs(got[i] - want[i]) <= tol);
  }
}

}  // namespace

TEST_CASE("dft of a delta is flat", "[core][dft]") {
  require_close(frdft::dft(Signal{1, 0, 0, 0}), Signal{0.5, 0.5, 0.5, 0.5}, 1e-15);
}

TEST_CASE("dft of a constant is a scaled delta", "[core][dft]") {
  require_close(frdft::dft(Signal{1, 1, 1, 1}), Signal{2, 0, 0, 0}, 1e-15);
}

TEST_CASE("dft twice reverses all but the first element", "[core][dft]") {
  require_close(frdft::dft(frdft::dft(Signal{1, 2, 3, 4})), Signal{1, 4, 3, 2}, 1e-14);
}

TEST_CASE("idft examples", "[core][idft]") {
  require_close(frdft::idft(Signal{2, 0, 0, 0}), Signal{1, 1, 1, 1}, 1e-15);
  require_close(frdft::idft(Signal{1, 0, 0, 0}), Signal{0.5, 0.5, 0.5, 0.5}, 1e-15);

  const Signal x = frdft::testing::random_signal(16, 7);
  REQUIRE(frdft::max_abs_diff(frdft::idft(frdft::dft(x)), x) <= 1e-12);
}

TEST_CASE("empty signals are rejected", "[core][errors]") {
  REQUIRE_THROWS_AS(frdft::dft(Signal{}), frdft::InvalidInput);
  REQUIRE_THROWS_AS(frdft::idft(Signal{}), frdft::InvalidInput);
  REQUIRE_THROWS_AS(frdft::dft_direct(Signal{}), frdft::InvalidInput);
}

TEST_CASE("parity", "[core][parity]") {
  REQUIRE(frdft::parity(Signal{1, 2, 3, 4}) == Signal{1, 4, 3, 2});
  REQUIRE(frdft::parity(Signal{5}) == Signal{5});

  const Signal x = frdft::testing::random_signal(13, 3);
  REQUIRE(frdft::parity(frdft::parity(x)) == x);
}

TEST_CASE("energy", "[core][energy]") {
  REQUIRE(frdft::energy(Signal{1, 0, 0, 0}) == 1.0);
  REQUIRE(frdft::energy(Signal{1, 1, 1, 1}) == 4.0);
  const Signal x = frdft::testing::random_signal(37, 11);
  REQUIRE_THAT(frdft::energy(frdft::dft(x)), WithinRel(frdft::energy(x), 1e-12));
}

TEST_CASE("dft matches the textbook kernel at every length up to 70", "[core][oracle]") {
  for (std::size_t n = 1; n <= 70; ++n) {
    const Signal x = frdft::testing::random_signal(n, 100 + n);
    INFO("n = " << n);
    REQUIRE(frdft::max_abs_diff(frdft::dft(x), frdft::testing::naive_dft(x)) <= 1e-11);
    REQUIRE(frdft::max_abs_diff(frdft::idft(x), frdft::testing::naive_dft(x, +1.0)) <= 1e-11);
  }
}

TEST_CASE("fast path agrees with direct summation for powers of two", "[core][oracle]") {
  for (std::size_t n = 1; n <= 256; n *= 2) {
    const Signal x = frdft::testing::random_signal(n, n);
    INFO("n = " << n);
    REQUIRE(frdft::max_abs_diff(frdft::dft(x), frdft::dft_direct(x)) <= 1e-10);
  }
}

TEST_CASE("core invariants over random signals", "[core][property]") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> pick(1, 1024);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = trial < 11 ? std::size_t{1} << trial : pick(rng);
    const Signal x = frdft::testing::random_signal(n, rng());
    const double e = frdft::energy(x);
    INFO("n = " << n);

    REQUIRE(std::abs(frdft::energy(frdft::dft(x)) - e) <= 1e-10 * e);

    const Signal twice = frdft::dft(frdft::dft(x));
    REQUIRE(frdft::max_abs_diff(twice, frdft::parity(x)) <= 1e-10 * std::sqrt(e));
    REQUIRE(frdft::max_abs_diff(frdft::dft(frdft::dft(twice)), x) <= 1e-10 * std::sqrt(e));
  }
}
