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

#include <numbers>

#include "frdft/chirp_lab.hpp"
#include "frdft/errors.hpp"
#include "frdft/tf_model.hpp"
#include "test_support.hpp"

using frdft::Complex;
using frdft::Signal;
namespace chirp = frdft::chirp;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double kPi = std::numbers::pi;

double grid_step(const std::vector<double>& grid) { return grid[1] - grid[0]; }

}  // namespace

TEST_CASE("make_tone", "[chirp][tone]") {
  for (const auto& v : chirp::make_tone(16, 0.0)) REQUIRE(v == Complex(1.0, 0.0));

  const Signal tone = chirp::make_tone(64, 3.0);
  for (const auto& v : tone) REQUIRE_THAT(std::abs(v), WithinAbs(1.0, 1e-15));
  REQUIRE(chirp::concentration(frdft::dft(tone), 1) >= 1.0 - 1e-12);
  REQUIRE_THROWS_AS(chirp::make_tone(0, 1.0), frdft::InvalidInput);
}

TEST_CASE("make_chirp", "[chirp][tone]") {
  REQUIRE(chirp::make_chirp(50, 4.5, 0.0) == chirp::make_tone(50, 4.5));
  REQUIRE(chirp::make_chirp(50, 4.5, 0.7) ==
          frdft::quadratic_phase(chirp::make_tone(50, 4.5), 0.7));
  for (const auto& v : chirp::make_chirp(128, 2.0, -0.3)) {
    REQUIRE_THAT(std::abs(v), WithinAbs(1.0, 1e-15));
  }
}

TEST_CASE("concentration", "[chirp][metric]") {
  REQUIRE(chirp::concentration(Signal{0, 0, 1, 0}, 1) == 1.0);
  REQUIRE_THAT(chirp::concentration(Signal(10, 1.0), 1), WithinAbs(0.1, 1e-15));
  REQUIRE_THAT(chirp::concentration(frdft::dft(chirp::make_tone(64, 3.0)), 1),
               WithinAbs(1.0, 1e-12));

  // Windows wrap around the end of the record.
  REQUIRE_THAT(chirp::concentration(Signal{3, 0, 0, 0, 4}, 2), WithinAbs(1.0, 1e-15));
  REQUIRE_THAT(chirp::concentration(Signal{1, 2, 3}, 3), WithinAbs(1.0, 1e-15));

  REQUIRE_THROWS_AS(chirp::concentration(Signal(4), 1), frdft::InvalidInput);
  REQUIRE_THROWS_AS(chirp::concentration(Signal(4, 1.0), 0), frdft::InvalidInput);
  REQUIRE_THROWS_AS(chirp::concentration(Signal(4, 1.0), 5), frdft::InvalidInput);
}

TEST_CASE("concentration ignores global phase and scale", "[chirp][metric][property]") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  std::uniform_real_distribution<double> scale(1e-3, 1e3);
  for (int trial = 0; trial < 100; ++trial) {
    const Signal x = frdft::testing::random_signal(1 + trial, rng());
    const Complex factor = std::polar(scale(rng), angle(rng));
    Signal y = x;
    for (auto& v : y) v *= factor;
    for (std::size_t w : {std::size_t{1}, std::size_t{1} + x.size() / 3}) {
      const double c = chirp::concentration(x, w);
      REQUIRE(c > 0.0);
      REQUIRE(c <= 1.0);
      REQUIRE_THAT(chirp::concentration(y, w), WithinAbs(c, 1e-12));
    }
  }
}

TEST_CASE("predicted_angle", "[chirp][predict]") {
  REQUIRE_THAT(chirp::predicted_angle(0.0), WithinAbs(kPi / 2, 1e-15));
  REQUIRE_THAT(chirp::predicted_angle(1.0), WithinAbs(kPi / 4, 1e-15));
  for (double q : {-2.0, -0.5, 0.0, 0.25, 0.5, 1.0, 3.0}) {
    const auto turned = frdft::tf::rotation(chirp::predicted_angle(q)) *
                        (frdft::tf::shear(q) * std::array<double, 2>{1.0, 0.0});
    INFO("q = " << q);
    REQUIRE(std::abs(turned[0]) <= 1e-12);
  }
}

TEST_CASE("uniform and default grids", "[chirp][grid]") {
  const auto grid = chirp::default_grid();
  REQUIRE(grid.size() == 181);
  REQUIRE(grid.front() == 0.01);
  REQUIRE(grid.back() == kPi - 0.01);
  for (std::size_t i = 1; i < grid.size(); ++i) REQUIRE(grid[i] > grid[i - 1]);
  REQUIRE(chirp::uniform_grid(1.0, 1.0, 1) == std::vector<double>{1.0});
  REQUIRE_THROWS_AS(chirp::uniform_grid(0.0, 1.0, 0), frdft::InvalidInput);
}

TEST_CASE("a tone localizes at the DFT angle", "[chirp][sweep]") {
  const auto grid = chirp::default_grid();
  const auto sweep = chirp::localization_sweep(chirp::make_tone(256, 10.0), grid, 1);
  REQUIRE(std::abs(sweep.argmax_alpha - kPi / 2) <= grid_step(grid));
  REQUIRE(sweep.concentration.size() == grid.size());
}

TEST_CASE("a chirp localizes at the predicted angle", "[chirp][sweep]") {
  const auto grid = chirp::default_grid();
  const auto sweep = chirp::localization_sweep(chirp::make_chirp(1024, 16.0, 0.5), grid, 1);
  REQUIRE_THAT(chirp::predicted_angle(0.5), WithinAbs(1.1071, 1e-4));
  REQUIRE(std::abs(sweep.argmax_alpha - chirp::predicted_angle(0.5)) <= 2 * grid_step(grid));
}

TEST_CASE("sweep edge cases", "[chirp][sweep][errors]") {
  const Signal x = chirp::make_tone(32, 2.0);
  const std::vector<double> single{1.0};
  const auto one = chirp::localization_sweep(x, single, 1);
  REQUIRE(one.grid.size() == 1);
  REQUIRE(one.concentration[0].has_value());
  REQUIRE(one.argmax_alpha == 1.0);

  REQUIRE_THROWS_AS(chirp::localization_sweep(x, std::vector<double>{}, 1), frdft::InvalidInput);
  REQUIRE_THROWS_AS(chirp::localization_sweep(x, std::vector<double>{1.0, 1.0}, 1),
                    frdft::InvalidInput);

  // A point on the singularity is recorded as missing, not fatal.
  const std::vector<double> with_pole{1.0, kPi, 3.5};
  const auto partial = chirp::localization_sweep(x, with_pole, 1);
  REQUIRE(partial.concentration[0].has_value());
  REQUIRE_FALSE(partial.concentration[1].has_value());
  REQUIRE_FALSE(partial.concentration[2].has_value());
  REQUIRE(partial.argmax_alpha == 1.0);

  REQUIRE_THROWS_AS(chirp::localization_sweep(x, std::vector<double>{kPi}, 1),
                    frdft::InvalidInput);
}

TEST_CASE("ties resolve to the smallest angle", "[chirp][sweep]") {
  // Angles this small leave every chirp factor at exactly 1, so all three
  // points score the same.
  const Signal x(8, 1.0);
  const std::vector<double> grid{-1e-300, 0.0, 1e-300};
  const auto sweep = chirp::localization_sweep(x, grid, 1);
  REQUIRE(sweep.argmax_alpha == -1e-300);
}

TEST_CASE("localizing angle decreases as the chirp rate grows", "[chirp][sweep][property]") {
  const auto grid = chirp::default_grid();
  double previous = std::numeric_limits<double>::infinity();
  for (double q : {0.0, 0.25, 0.5, 1.0}) {
    const Signal x = chirp::make_chirp(1024, 16.0, q);
    const auto sweep = chirp::localization_sweep(x, grid, 1);
    INFO("q = " << q);
    REQUIRE(sweep.argmax_alpha < previous);
    previous = sweep.argmax_alpha;
    if (q >= 0.5) {
      const double at_dft = chirp::concentration(frdft::frdft_apply(x, kPi / 2), 1);
      double best = 0.0;
      for (const auto& c : sweep.concentration) best = std::max(best, c.value_or(0.0));
      REQUIRE(best > at_dft);
    }
  }
}
