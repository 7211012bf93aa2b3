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
#include <optional>
#include <span>
#include <vector>

#include "frdft/core.hpp"
#include "frdft/fractional.hpp"

namespace frdft::chirp {

// x_j = exp(-2 pi i f0 j / n); f0 in cycles per record.
Signal make_tone(std::size_t n, double f0);

// quadratic_phase(make_tone(n, f0), q).
Signal make_chirp(std::size_t n, double f0, double q);

/// Peak energy fraction over all cyclic windows of `window` consecutive
/// samples. Result is in (0, 1]. Throws InvalidInput for a zero-energy signal
/// or a window outside [1, N].
double concentration(std::span<const Complex> x, std::size_t window = 1);

/// Angle at which rotation(alpha) * shear(q) turns the chirp direction (1, q)
/// vertical: pi/2 - atan(q).
double predicted_angle(double q);

// `count` evenly spaced angles from start to stop inclusive.
std::vector<double> uniform_grid(double start, double stop, std::size_t count);

// 181 points over [0.01, pi - 0.01].
std::vector<double> default_grid();

struct SweepResult {
  std::vector<double> grid;
  // Empty where the transform failed at that angle.
  std::vector<std::optional<double>> concentration;
  double argmax_alpha = 0.0;
};

/// Evaluates concentration(frdft_apply(x, alpha, raw), window) at every grid
/// point. Ties resolve to the smallest alpha. Throws InvalidInput for an empty
/// or non-increasing grid, or if no grid point could be evaluated.
SweepResult localization_sweep(std::span<const Complex> x, std::span<const double> grid,
                               std::size_t window = 1, const FrdftConfig& config = {});

}  // namespace frdft::chirp
