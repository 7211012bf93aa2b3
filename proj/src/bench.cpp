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


#include "frdft/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <random>

#include "frdft/core.hpp"
#include "frdft/errors.hpp"
#include "frdft/fractional.hpp"
#include "frdft/signal_io.hpp"

namespace frdft::bench {
namespace {

using Clock = std::chrono::steady_clock;

void check_sizes(const std::vector<std::size_t>& sizes, const char* what) {
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (!is_power_of_two(sizes[i])) {
      throw InvalidInput(std::string(what) + ": " + std::to_string(sizes[i]) +
                         " is not a power of two");
    }
    if (i > 0 && sizes[i] <= sizes[i - 1]) {
      throw InvalidInput(std::string(what) + ": sizes must be strictly increasing");
    }
  }
}

template <typename Fn>
double seconds_for(Fn&& fn, std::size_t iterations) {
  const auto start = Clock::now();
  for (std::size_t i = 0; i < iterations; ++i) fn();
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Median per-call wall time over `repeats` runs of a calibrated batch.
template <typename Fn>
double median_seconds(Fn&& fn, const BenchOptions& options) {
  const double probe = seconds_for(fn, 1);
  std::size_t iterations = 1;
  if (probe < options.min_run_seconds) {
    iterations = static_cast<std::size_t>(
        std::ceil(options.min_run_seconds / std::max(probe, 1e-9)));
  }
  std::vector<double> samples;
  for (int r = 0; r < std::max(1, options.repeats); ++r) {
    samples.push_back(seconds_for(fn, iterations) / static_cast<double>(iterations));
  }
  std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
  return samples[samples.size() / 2];
}

Signal bench_signal(std::size_t n) {
  std::mt19937_64 rng(n);
  std::normal_distribution<double> gauss;
  Signal x(n);
  for (auto& v : x) v = {gauss(rng), gauss(rng)};
  return x;
}

void append_slopes(std::vector<BenchRow>& rows, std::size_t first) {
  for (std::size_t i = first + 1; i < rows.size(); ++i) {
    const BenchRow& prev = rows[i - 1];
    rows[i].slope = std::log(rows[i].median_seconds / prev.median_seconds) /
                    std::log(static_cast<double>(rows[i].n) / static_cast<double>(prev.n));
  }
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchOptions& options) {
  if (options.sizes.empty()) throw InvalidInput("bench: size list is empty");
  check_sizes(options.sizes, "bench");
  check_sizes(options.matrix_sizes, "bench matrix");
  if (!options.matrix_sizes.empty() && options.matrix_sizes.back() > options.config.matrix_cap) {
    throw ResourceError("bench: matrix size " + std::to_string(options.matrix_sizes.back()) +
                        " exceeds the matrix size cap of " +
                        std::to_string(options.config.matrix_cap));
  }

  std::vector<BenchRow> rows;
  for (std::size_t n : options.sizes) {
    const Signal x = bench_signal(n);
    volatile double sink = 0.0;
    const auto run = [&] {
      sink = sink + frdft_apply(x, options.alpha, ApplyMode::raw, options.config)[0].real();
    };
    const double t = median_seconds(run, options);
    rows.push_back({"apply", n, t, std::nullopt});
  }
  append_slopes(rows, 0);

  const std::size_t matrix_first = rows.size();
  for (std::size_t n : options.matrix_sizes) {
    const Signal x = bench_signal(n);
    volatile double sink = 0.0;
    const double t = median_seconds(
        [&] {
          const TransformMatrix f = frdft_matrix(n, options.alpha, options.config);
          sink = sink + apply_matrix(f, x)[0].real();
        },
        options);
    rows.push_back({"matrix", n, t, std::nullopt});
  }
  append_slopes(rows, matrix_first);
  return rows;
}

std::optional<double> fitted_slope(const std::vector<BenchRow>& rows, const std::string& path) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& r : rows) {
    if (r.path != path) continue;
    xs.push_back(std::log(static_cast<double>(r.n)));
    ys.push_back(std::log(r.median_seconds));
  }
  if (xs.size() < 2) return std::nullopt;
  const double count = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= count;
  my /= count;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

void write_report(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "path,n,seconds,slope\n";
  for (const auto& r : rows) {
    out << r.path << ',' << r.n << ',' << io::format_double(r.median_seconds) << ',';
    if (r.slope) out << io::format_double(*r.slope);
    out << '\n';
  }
}

}  // namespace frdft::bench
