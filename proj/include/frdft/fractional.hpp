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
#include <span>
#include <vector>

#include "frdft/core.hpp"

namespace frdft {

// Tunables shared by the raw chirp path and the closed-form matrix path.
struct FrdftConfig {
  // Largest |tan(alpha/2)| the raw path accepts.
  double conditioning_bound = 1e8;
  // Largest N for which frdft_matrix will allocate and fill N^2 entries.
  std::size_t matrix_cap = 4096;
};

// Chirp rates of the five-step algorithm: q1 = tan(alpha/2), q2 = sin(alpha).
struct ChirpRates {
  double q1 = 0.0;
  double q2 = 0.0;
};

/// Maps a rotation angle to its chirp rates.
///
/// Throws ConditioningError when alpha is outside (-pi, pi) or when
/// |tan(alpha/2)| exceeds `config.conditioning_bound`.
ChirpRates chirp_rates(double alpha, const FrdftConfig& config = {});

// y_j = exp(-i pi q j^2 / N) x_j.
Signal quadratic_phase(std::span<const Complex> x, double q);

enum class ApplyMode {
  // The five chirp/DFT steps evaluated directly at alpha.
  raw,
  // Quarter turns by exact DFT powers, residual |beta| <= pi/4 by the raw path.
  decomposed,
};

Signal frdft_apply(std::span<const Complex> x, double alpha,
                   ApplyMode mode = ApplyMode::raw, const FrdftConfig& config = {});

// Dense N x N complex matrix, row-major: at(j, k) == M_jk.
class TransformMatrix {
 public:
  explicit TransformMatrix(std::size_t n);

  static TransformMatrix identity(std::size_t n);
  // The unitary DFT kernel B_jk = N^{-1/2} exp(-2 pi i jk / N).
  static TransformMatrix dft_kernel(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  Complex& at(std::size_t j, std::size_t k) { return entries_[j * n_ + k]; }
  const Complex& at(std::size_t j, std::size_t k) const { return entries_[j * n_ + k]; }
  std::span<const Complex> row(std::size_t j) const {
    return {entries_.data() + j * n_, n_};
  }
  std::span<const Complex> entries() const noexcept { return entries_; }

  TransformMatrix operator*(const TransformMatrix& rhs) const;
  TransformMatrix adjoint() const;

 private:
  std::size_t n_;
  std::vector<Complex> entries_;
};

// Largest elementwise |A_jk - B_jk|.
double max_abs_diff(const TransformMatrix& a, const TransformMatrix& b);

/// Closed-form matrix of the fractional transform:
///
///   F_jk = (1/N) exp(-i pi q1 (j^2 + k^2) / N)
///          * sum_{m=0}^{N-1} exp(-i pi (q2 m^2 + 2 m (k - j)) / N)
///
/// Every entry runs its own N-term sum in ascending m, so the build is O(N^3).
/// Throws InvalidInput for n == 0, ResourceError above `config.matrix_cap`,
/// ConditioningError as chirp_rates().
TransformMatrix frdft_matrix(std::size_t n, double alpha, const FrdftConfig& config = {});

// y_j = sum_k M_jk x_k. Throws InvalidInput on a dimension mismatch.
Signal apply_matrix(const TransformMatrix& m, std::span<const Complex> x);

// S_k = sum_{s=k}^{k+n-1} zeta^{s^2}, zeta = exp(-i pi / n), summed term by term.
struct RootSum {
  std::int64_t n = 0;
  std::int64_t k = 0;
  Complex value;

  bool n_is_even() const noexcept { return n % 2 == 0; }
};

RootSum root_sum(std::int64_t n, std::int64_t k);

/// Overall phase S_0 / sqrt(n) relating F(pi/2) to the DFT kernel.
/// Only defined for even n; odd n throws UnsupportedParity.
Complex sigma(std::int64_t n);

// alpha == quarter_turns * pi/2 + residual (mod 2 pi).
struct AngleDecomposition {
  int quarter_turns = 0;  // in {0, 1, 2, 3}
  double residual = 0.0;  // in [-pi/4, pi/4)
};

AngleDecomposition reduce_angle(double alpha);

}  // namespace frdft
