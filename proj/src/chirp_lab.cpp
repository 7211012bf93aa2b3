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


#include "frdft/chirp_lab.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "frdft/errors.hpp"

namespace frdft::chirp {

Signal make_tone(std::size_t n, double f0) {
  if (n == 0) throw InvalidInput("make_tone: n must be at least 1");
  Signal x(n);
  const double nd = static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double theta = -2.0 * std::numbers::pi * f0 * static_cast<double>(j) / nd;
    x[j] = {std::cos(theta), std::sin(theta)};
  }
  return x;
}

Signal make_chirp(std::size_t n, double f0, double q) {
  return quadratic_phase(make_tone(n, f0), q);
}

double concentration(std::span<const Complex> x, std::size_t window) {
  const std::size_t n = x.size();
  if (window < 1 || window > n) {
    throw InvalidInput("concentration: window must be in [1, N]");
  }
  std::vector<double> power(n);
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    power[j] = std::norm(x[j]);
    total += power[j];
  }
  if (!(total > 0.0)) throw InvalidInput("concentration: signal has zero energy");

  // Each window is summed from scratch so no running-sum drift enters the ratio.
  double best = 0.0;
  for (std::size_t start = 0; start < n; ++start) {
    double acc = 0.0;
    for (std::size_t i = 0; i < window; ++i) acc += power[(start + i) % n];
    best = std::max(best, acc);
  }
  return std::min(1.0, best / total);
}

double predicted_angle(double q) { return std::numbers::pi / 2.0 - std::atan(q); }

std::vector<double> uniform_grid(double start, double stop, std::size_t count) {
  if (count == 0) throw InvalidInput("uniform_grid: count must be at least 1");
  if (count == 1) return {start};
  std::vector<double> grid(count);
  const double step = (stop - start) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) grid[i] = start + step * static_cast<double>(i);
  grid.back() = stop;
  return grid;
}

std::vector<double> default_grid() {
  return uniform_grid(0.01, std::numbers::pi - 0.01, 181);
}

SweepResult localization_sweep(std::span<const Complex> x, std::span<const double> grid,
                               std::size_t window, const FrdftConfig& config) {
  if (grid.empty()) throw InvalidInput("localization_sweep: grid is empty");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw InvalidInput("localization_sweep: grid must be strictly increasing");
    }
  }

  SweepResult result;
  result.grid.assign(grid.begin(), grid.end());
  result.concentration.reserve(grid.size());
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::optional<double> value;
    try {
      value = concentration(frdft_apply(x, grid[i], ApplyMode::raw, config), window);
    } catch (const ConditioningError&) {
    }
    if (value && (!best || *value > *result.concentration[*best])) best = i;
    result.concentration.push_back(value);
  }
  if (!best) throw InvalidInput("localization_sweep: no grid point could be evaluated");
  result.argmax_alpha = result.grid[*best];
  return result;
}

}  // namespace frdft::chirp
