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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace frdft {

using Complex = std::complex<double>;

// N complex samples in time, frequency or a fractional domain. Indexing is
// 0-based; periodic extension x[j + N] == x[j] is a reading convention only.
using Signal = std::vector<Complex>;

bool is_power_of_two(std::size_t n) noexcept;

/// Unitary forward DFT, f_j = N^{-1/2} sum_k exp(-2 pi i jk / N) x_k.
///
/// Power-of-two lengths run an in-place radix-2 FFT; every other length is
/// evaluated by direct summation. Throws InvalidInput on an empty signal.
Signal dft(std::span<const Complex> x);

/// Unitary inverse DFT (conjugate kernel), the exact inverse of dft().
Signal idft(std::span<const Complex> x);

/// O(N^2) direct summation of the unitary kernel for any length.
Signal dft_direct(std::span<const Complex> x);

// y_j = x_{(N - j) mod N}; equal to dft applied twice.
Signal parity(std::span<const Complex> x);

double energy(std::span<const Complex> x) noexcept;

// Largest elementwise |a_j - b_j|. Lengths must match.
double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace frdft
