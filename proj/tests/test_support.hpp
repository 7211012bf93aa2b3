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

// Test-only helpers and independent oracles. Nothing here calls into the
// library's transform code paths.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <random>
#include <vector>

namespace frdft::testing {

using C = std::complex<double>;

inline std::vector<C> random_signal(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<C> x(n);
  for (auto& v : x) v = {gauss(rng), gauss(rng)};
  return x;
}

inline std::vector<C> normalized(std::vector<C> x) {
  double e = 0.0;
  for (const auto& v : x) e += std::norm(v);
  for (auto& v : x) v /= std::sqrt(e);
  return x;
}

// Textbook O(N^2) unitary DFT with std::exp on the unreduced angle.
inline std::vector<C> naive_dft(const std::vector<C>& x, double sign = -1.0) {
  const std::size_t n = x.size();
  std::vector<C> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    C acc{};
    for (std::size_t k = 0; k < n; ++k) {
      acc += std::exp(C(0.0, sign * 2.0 * std::numbers::pi * double(j) * double(k) / double(n))) *
             x[k];
    }
    out[j] = acc / std::sqrt(double(n));
  }
  return out;
}

// Five-step chirp/DFT product evaluated as dense matrix algebra:
// A(q1) B^H A(q2) B A(q1), each factor built from its definition.
inline std::vector<C> naive_fractional_matrix(std::size_t n, double alpha) {
  const double q1 = std::tan(alpha / 2.0);
  const double q2 = std::sin(alpha);
  const double nd = double(n);
  auto b = [&](std::size_t j, std::size_t k) {
    return std::exp(C(0.0, -2.0 * std::numbers::pi * double(j) * double(k) / nd)) / std::sqrt(nd);
  };
  auto a = [&](double q, std::size_t j) {
    return std::exp(C(0.0, -std::numbers::pi * q * double(j) * double(j) / nd));
  };
  // M = B^H diag(A(q2)) B
  std::vector<C> m(n * n);
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t p = 0; p < n; ++p) {
      C acc{};
      for (std::size_t s = 0; s < n; ++s) acc += std::conj(b(s, l)) * a(q2, s) * b(s, p);
      m[l * n + p] = acc;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) m[j * n + k] *= a(q1, j) * a(q1, k);
  }
  return m;
}

inline double max_abs(const std::vector<C>& a, const std::vector<C>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace frdft::testing
