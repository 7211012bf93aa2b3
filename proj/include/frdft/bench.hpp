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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "frdft/fractional.hpp"

namespace frdft::bench {

struct BenchOptions {
  // Sizes for the fast apply path; strictly increasing powers of two.
  std::vector<std::size_t> sizes;
  // Sizes for the closed-form matrix path (build + apply); same rules.
  std::vector<std::size_t> matrix_sizes;
  // Timed runs per size; the median is reported.
  int repeats = 5;
  // Each run repeats the operation until it has taken at least this long.
  double min_run_seconds = 0.02;
  double alpha = 0.7;
  FrdftConfig config;
};

struct BenchRow {
  std::string path;  // "apply" or "matrix"
  std::size_t n = 0;
  double median_seconds = 0.0;
  // log(t_i / t_{i-1}) / log(n_i / n_{i-1}) against the previous row of the same path.
  std::optional<double> slope;
};

/// Times both paths single-threaded. Throws InvalidInput when `sizes` is
/// empty, a size is not a power of two, or a list is not strictly increasing;
/// ResourceError when a matrix size exceeds `config.matrix_cap`.
std::vector<BenchRow> run_bench(const BenchOptions& options);

// Least-squares slope of log(time) against log(n) over every row of `path`.
// Empty when fewer than two rows exist.
std::optional<double> fitted_slope(const std::vector<BenchRow>& rows, const std::string& path);

// "path,n,seconds,slope"
void write_report(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace frdft::bench
