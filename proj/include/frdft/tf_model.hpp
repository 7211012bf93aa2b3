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

#include <array>

namespace frdft::tf {

// 2x2 real matrix acting on the column vector (t, f).
struct TF2Matrix {
  std::array<std::array<double, 2>, 2> m{};

  static TF2Matrix identity() { return {{{{1.0, 0.0}, {0.0, 1.0}}}}; }

  double operator()(int row, int col) const { return m[row][col]; }
  TF2Matrix operator*(const TF2Matrix& rhs) const;
  std::array<double, 2> operator*(const std::array<double, 2>& v) const;
  double determinant() const;
};

double max_entry_diff(const TF2Matrix& a, const TF2Matrix& b);

// Chirp multiply: t' = t, f' = q t + f.
TF2Matrix shear(double q);

// The DFT as a pi/2 turn: t -> f, f -> -t.
TF2Matrix quarter_rotation();

/// Product A(q1) B^{-1} A(q2) B A(q1) of the five algorithm steps, with
/// (q1, q2) from chirp_rates(alpha). Throws ConditioningError as chirp_rates.
TF2Matrix compose_garcia(double alpha);

TF2Matrix rotation(double alpha);

}  // namespace frdft::tf
