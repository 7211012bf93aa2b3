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


#include "frdft/tf_model.hpp"

#include <algorithm>
#include <cmath>

#include "frdft/fractional.hpp"

namespace frdft::tf {

TF2Matrix TF2Matrix::operator*(const TF2Matrix& rhs) const {
  TF2Matrix out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.m[i][j] = m[i][0] * rhs.m[0][j] + m[i][1] * rhs.m[1][j];
    }
  }
  return out;
}

std::array<double, 2> TF2Matrix::operator*(const std::array<double, 2>& v) const {
  return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

double TF2Matrix::determinant() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

double max_entry_diff(const TF2Matrix& a, const TF2Matrix& b) {
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) worst = std::max(worst, std::abs(a.m[i][j] - b.m[i][j]));
  }
  return worst;
}

TF2Matrix shear(double q) { return {{{{1.0, 0.0}, {q, 1.0}}}}; }

TF2Matrix quarter_rotation() { return {{{{0.0, -1.0}, {1.0, 0.0}}}}; }

TF2Matrix compose_garcia(double alpha) {
  const ChirpRates rates = chirp_rates(alpha);
  const TF2Matrix b = quarter_rotation();
  const TF2Matrix b_inv = {{{{0.0, 1.0}, {-1.0, 0.0}}}};
  return shear(rates.q1) * b_inv * shear(rates.q2) * b * shear(rates.q1);
}

TF2Matrix rotation(double alpha) {
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  return {{{{c, -s}, {s, c}}}};
}

}  // namespace frdft::tf
