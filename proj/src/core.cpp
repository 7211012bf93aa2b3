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


#include "frdft/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "frdft/errors.hpp"

namespace frdft {
namespace {

void require_nonempty(std::span<const Complex> x, const char* op) {
  if (x.empty()) {
    throw InvalidInput(std::string(op) + ": signal must have at least one sample");
  }
}

// exp(-2 pi i r / n) for r in [0, n).
std::vector<Complex> roots_of_unity(std::size_t n) {
  std::vector<Complex> w(n);
  for (std::size_t r = 0; r < n; ++r) {
    const double theta = -2.0 * std::numbers::pi * static_cast<double>(r) /
                         static_cast<double>(n);
    w[r] = {std::cos(theta), std::sin(theta)};
  }
  return w;
}

// Unnormalized in-place radix-2 decimation-in-time, forward sign.
void fft_radix2(std::vector<Complex>& a) {
  const std::size_t n = a.size();
  if (n < 2) return;

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  const std::vector<Complex> w = roots_of_unity(n);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len >> 1;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const Complex t = w[k * stride] * a[start + k + half];
        const Complex u = a[start + k];
        a[start + k] = u + t;
        a[start + k + half] = u - t;
      }
    }
  }
}

// Unnormalized O(N^2) forward sum; the root index (j * k) mod N keeps every
// twiddle exact to one rounding regardless of N.
Signal direct_sum(std::span<const Complex> x) {
  const std::size_t n = x.size();
  const std::vector<Complex> w = roots_of_unity(n);
  Signal out(n);
  for (std::size_t j = 0; j < n; ++j) {
    Complex acc{};
    for (std::size_t k = 0; k < n; ++k) acc += w[(j * k) % n] * x[k];
    out[j] = acc;
  }
  return out;
}

void scale_unitary(Signal& s) {
  const double scale = 1.0 / std::sqrt(static_cast<double>(s.size()));
  for (auto& v : s) v *= scale;
}

Signal forward_unitary(std::span<const Complex> x) {
  Signal out;
  if (is_power_of_two(x.size())) {
    out.assign(x.begin(), x.end());
    fft_radix2(out);
  } else {
    out = direct_sum(x);
  }
  scale_unitary(out);
  return out;
}

}  // namespace

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

Signal dft(std::span<const Complex> x) {
  require_nonempty(x, "dft");
  return forward_unitary(x);
}

Signal idft(std::span<const Complex> x) {
  require_nonempty(x, "idft");
  Signal conj_in(x.size());
  std::transform(x.begin(), x.end(), conj_in.begin(),
                 [](Complex v) { return std::conj(v); });
  Signal out = forward_unitary(conj_in);
  for (auto& v : out) v = std::conj(v);
  return out;
}

Signal dft_direct(std::span<const Complex> x) {
  require_nonempty(x, "dft_direct");
  Signal out = direct_sum(x);
  scale_unitary(out);
  return out;
}

Signal parity(std::span<const Complex> x) {
  const std::size_t n = x.size();
  Signal out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = x[(n - j) % n];
  return out;
}

double energy(std::span<const Complex> x) noexcept {
  double e = 0.0;
  for (const auto& v : x) e += std::norm(v);
  return e;
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) {
    throw InvalidInput("max_abs_diff: length mismatch");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

}  // namespace frdft
