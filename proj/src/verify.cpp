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


#include "frdft/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <set>

#include "frdft/core.hpp"
#include "frdft/fractional.hpp"
#include "frdft/tf_model.hpp"

namespace frdft::verify {
namespace {

constexpr double kPi = std::numbers::pi;

using Transform = std::function<Signal(std::span<const Complex>)>;

// Each property draws from its own stream so adding sizes to one check never
// shifts the samples of another.
std::mt19937_64 stream_for(std::uint64_t seed, std::uint64_t property) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(property)};
  return std::mt19937_64(seq);
}

Signal random_signal(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Signal x(n);
  for (auto& v : x) v = {gauss(rng), gauss(rng)};
  return x;
}

Signal unit_energy(Signal x) {
  const double norm = std::sqrt(energy(x));
  for (auto& v : x) v /= norm;
  return x;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double relative_l2(std::span<const Complex> got, std::span<const Complex> want) {
  double num = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) num += std::norm(got[i] - want[i]);
  return std::sqrt(num / energy(want));
}

std::vector<std::size_t> powers_of_two(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> out;
  for (std::size_t n = lo; n <= hi; n *= 2) out.push_back(n);
  return out;
}

std::vector<std::size_t> capped(std::vector<std::size_t> sizes, std::size_t max_n) {
  std::erase_if(sizes, [max_n](std::size_t n) { return n > max_n; });
  return sizes;
}

// 1..32, every power of two up to max_n, and a few random lengths above 32.
std::vector<std::size_t> core_sizes(std::size_t max_n, std::mt19937_64& rng) {
  std::set<std::size_t> sizes;
  for (std::size_t n = 1; n <= std::min<std::size_t>(32, max_n); ++n) sizes.insert(n);
  for (std::size_t n : powers_of_two(1, max_n)) sizes.insert(n);
  if (max_n > 33) {
    std::uniform_int_distribution<std::size_t> pick(33, max_n);
    for (int i = 0; i < 6; ++i) sizes.insert(pick(rng));
  }
  return {sizes.begin(), sizes.end()};
}

class Suite {
 public:
  explicit Suite(const VerifyOptions& options) : options_(options) {
    if (options.corrupt_normalization) {
      forward_ = [](std::span<const Complex> x) {
        Signal y = dft(x);
        for (auto& v : y) v *= 1.0 + 1e-3;
        return y;
      };
    } else {
      forward_ = [](std::span<const Complex> x) { return dft(x); };
    }
  }

  VerifyReport run() {
    report_.max_n = options_.max_n;
    report_.seed = options_.seed;
    core_unitarity();
    core_fourth_power();
    core_square_is_parity();
    core_fast_matches_direct();
    matrix_oracle_equivalence();
    apply_unitarity();
    inverse_pairing();
    small_angle_continuity();
    root_sum_shift_invariance();
    root_sum_odd_counterexample();
    sigma_unit_modulus();
    quarter_turn_limit();
    decomposed_quarter_turns();
    tf_garcia_is_rotation();
    tf_unit_determinant();
    tf_diagonal_is_cosine();
    additivity();
    return std::move(report_);
  }

 private:
  void record(std::string name, double worst, double tolerance) {
    report_.properties.push_back({std::move(name), worst <= tolerance, worst, tolerance, "<="});
  }

  void core_unitarity() {
    auto rng = stream_for(options_.seed, 1);
    double worst = 0.0;
    for (std::size_t n : core_sizes(options_.max_n, rng)) {
      const Signal x = random_signal(n, rng);
      const double e = energy(x);
      worst = std::max(worst, std::abs(energy(forward_(x)) - e) / e);
    }
    record("core.unitarity", worst, 1e-10);
  }

  void core_fourth_power() {
    auto rng = stream_for(options_.seed, 2);
    double worst = 0.0;
    for (std::size_t n : core_sizes(options_.max_n, rng)) {
      const Signal x = random_signal(n, rng);
      const Signal y = forward_(forward_(forward_(forward_(x))));
      worst = std::max(worst, relative_l2(y, x));
    }
    record("core.fourth_power_identity", worst, 1e-10);
  }

  void core_square_is_parity() {
    auto rng = stream_for(options_.seed, 3);
    double worst = 0.0;
    for (std::size_t n : core_sizes(options_.max_n, rng)) {
      const Signal x = random_signal(n, rng);
      worst = std::max(worst, relative_l2(forward_(forward_(x)), parity(x)));
    }
    record("core.dft_squared_is_parity", worst, 1e-10);
  }

  void core_fast_matches_direct() {
    auto rng = stream_for(options_.seed, 4);
    double worst = 0.0;
    for (std::size_t n : capped(powers_of_two(1, 256), options_.max_n)) {
      const Signal x = random_signal(n, rng);
      worst = std::max(worst, max_abs_diff(forward_(x), dft_direct(x)));
    }
    record("core.fast_matches_direct", worst, 1e-10);
  }

  void matrix_oracle_equivalence() {
    auto rng = stream_for(options_.seed, 5);
    double worst = 0.0;
    for (std::size_t n : capped(powers_of_two(4, 128), options_.max_n)) {
      for (int trial = 0; trial < 20; ++trial) {
        const double alpha = uniform(rng, -0.75 * kPi, 0.75 * kPi);
        const TransformMatrix f = frdft_matrix(n, alpha);
        Signal basis(n);
        for (std::size_t k = 0; k < n; ++k) {
          std::fill(basis.begin(), basis.end(), Complex{});
          basis[k] = 1.0;
          const Signal column = frdft_apply(basis, alpha);
          for (std::size_t j = 0; j < n; ++j) {
            worst = std::max(worst, std::abs(column[j] - f.at(j, k)));
          }
        }
      }
    }
    record("frdft.matrix_oracle_equivalence", worst, 1e-9);
  }

  std::vector<std::size_t> apply_sizes() const {
    return capped({1, 2, 3, 5, 8, 16, 17, 64, 100, 256, 1024, 4096}, options_.max_n);
  }

  void apply_unitarity() {
    auto rng = stream_for(options_.seed, 6);
    double worst = 0.0;
    for (std::size_t n : apply_sizes()) {
      for (int trial = 0; trial < 4; ++trial) {
        const Signal x = random_signal(n, rng);
        const double alpha = uniform(rng, -0.95 * kPi, 0.95 * kPi);
        const double e = energy(x);
        worst = std::max(worst, std::abs(energy(frdft_apply(x, alpha)) - e) / e);
      }
    }
    record("frdft.apply_unitarity", worst, 1e-10);
  }

  void inverse_pairing() {
    auto rng = stream_for(options_.seed, 7);
    double worst = 0.0;
    for (std::size_t n : apply_sizes()) {
      for (int trial = 0; trial < 4; ++trial) {
        const Signal x = unit_energy(random_signal(n, rng));
        const double alpha = uniform(rng, -0.95 * kPi, 0.95 * kPi);
        const Signal back = frdft_apply(frdft_apply(x, alpha), -alpha);
        worst = std::max(worst, max_abs_diff(back, x));
      }
    }
    record("frdft.inverse_pairing", worst, 1e-9);
  }

  // Each chirp factor differs from I by at most e = pi |q| N in operator norm,
  // so |F(eps) x - x| <= (1 + e1)^2 (1 + e2) - 1 for unit-energy x. The
  // reported worst is the largest measured fraction of that bound.
  void small_angle_continuity() {
    constexpr double kEps = 1e-6;
    auto rng = stream_for(options_.seed, 8);
    const ChirpRates rates = chirp_rates(kEps);
    double worst = 0.0;
    for (std::size_t n : capped({1, 2, 3, 7, 16, 64, 100, 256, 1024}, options_.max_n)) {
      const Signal x = unit_energy(random_signal(n, rng));
      const double deviation = max_abs_diff(frdft_apply(x, kEps), x);
      const double e1 = kPi * std::abs(rates.q1) * static_cast<double>(n);
      const double e2 = kPi * std::abs(rates.q2) * static_cast<double>(n);
      const double bound = (1.0 + e1) * (1.0 + e1) * (1.0 + e2) - 1.0;
      worst = std::max(worst, deviation / bound);
      report_.small_angle.push_back({n, deviation});
    }
    record("frdft.small_angle_continuity", worst, 1.0);
  }

  void root_sum_shift_invariance() {
    double worst = 0.0;
    for (std::int64_t n = 2; n <= 64; n += 2) {
      const Complex s0 = root_sum(n, 0).value;
      for (std::int64_t k = -2 * n; k <= 2 * n; ++k) {
        worst = std::max(worst, std::abs(root_sum(n, k).value - s0));
      }
    }
    record("frdft.root_sum_shift_invariance", worst, 1e-12);
  }

  // For each odd n some shift must move the sum by more than 0.1; the smallest
  // such maximum over n is reported.
  void root_sum_odd_counterexample() {
    double weakest = std::numeric_limits<double>::infinity();
    for (std::int64_t n : {3, 5, 7}) {
      const Complex s0 = root_sum(n, 0).value;
      double largest = 0.0;
      for (std::int64_t k = -2 * n; k <= 2 * n; ++k) {
        largest = std::max(largest, std::abs(root_sum(n, k).value - s0));
      }
      weakest = std::min(weakest, largest);
    }
    report_.properties.push_back(
        {"frdft.root_sum_odd_counterexample", weakest > 0.1, weakest, 0.1, ">"});
  }

  void sigma_unit_modulus() {
    double worst = 0.0;
    for (std::int64_t n = 2; n <= static_cast<std::int64_t>(options_.max_n); n += 2) {
      worst = std::max(worst, std::abs(std::abs(sigma(n)) - 1.0));
    }
    record("frdft.sigma_unit_modulus", worst, 1e-12);
  }

  void quarter_turn_limit() {
    double worst = 0.0;
    for (std::size_t n : capped({4, 16, 64, 256}, options_.max_n)) {
      const TransformMatrix f = frdft_matrix(n, kPi / 2.0);
      const TransformMatrix b = TransformMatrix::dft_kernel(n);
      const Complex phase = sigma(static_cast<std::int64_t>(n));
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          worst = std::max(worst, std::abs(f.at(j, k) - phase * b.at(j, k)));
        }
      }
    }
    record("frdft.quarter_turn_limit", worst, 1e-10);
  }

  void decomposed_quarter_turns() {
    auto rng = stream_for(options_.seed, 9);
    double worst = 0.0;
    for (std::size_t n : capped({1, 3, 8, 64, 1024}, options_.max_n)) {
      const Signal x = random_signal(n, rng);
      worst = std::max(worst, max_abs_diff(frdft_apply(x, kPi / 2.0, ApplyMode::decomposed),
                                           dft(x)));
      worst = std::max(worst, max_abs_diff(frdft_apply(x, kPi, ApplyMode::decomposed),
                                           parity(x)));
    }
    record("frdft.decomposed_quarter_turns", worst, 0.0);
  }

  static std::vector<double> tf_alphas(std::uint64_t seed) {
    auto rng = stream_for(seed, 10);
    std::vector<double> alphas(1000);
    for (auto& a : alphas) a = uniform(rng, -3.0, 3.0);
    return alphas;
  }

  void tf_garcia_is_rotation() {
    double worst = 0.0;
    for (double a : tf_alphas(options_.seed)) {
      worst = std::max(worst, tf::max_entry_diff(tf::compose_garcia(a), tf::rotation(a)));
    }
    record("tf.garcia_equals_rotation", worst, 1e-12);
  }

  void tf_unit_determinant() {
    double worst = std::abs(tf::quarter_rotation().determinant() - 1.0);
    for (double a : tf_alphas(options_.seed)) {
      worst = std::max(worst, std::abs(tf::compose_garcia(a).determinant() - 1.0));
      worst = std::max(worst, std::abs(tf::rotation(a).determinant() - 1.0));
      worst = std::max(worst, std::abs(tf::shear(a).determinant() - 1.0));
    }
    record("tf.unit_determinant", worst, 1e-12);
  }

  void tf_diagonal_is_cosine() {
    double worst = 0.0;
    for (double a : tf_alphas(options_.seed)) {
      const double diag = tf::compose_garcia(a)(0, 0);
      const double closed = 1.0 - std::tan(a / 2.0) * std::sin(a);
      worst = std::max({worst, std::abs(diag - closed), std::abs(diag - std::cos(a))});
    }
    record("tf.diagonal_is_cosine", worst, 1e-12);
  }

  void additivity() {
    auto rng = stream_for(options_.seed, 11);
    const std::size_t n = report_.additivity_n;
    for (int i = 0; i < 10; ++i) {
      const double alpha = uniform(rng, -kPi / 2.0, kPi / 2.0);
      const double beta = uniform(rng, -kPi / 2.0, kPi / 2.0);
      const TransformMatrix product = frdft_matrix(n, alpha) * frdft_matrix(n, beta);
      const double deviation = max_abs_diff(product, frdft_matrix(n, alpha + beta));
      report_.additivity.push_back({alpha, beta, deviation});
    }
  }

  VerifyOptions options_;
  Transform forward_;
  VerifyReport report_;
};

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.passed; });
}

VerifyReport run_verify(const VerifyOptions& options) { return Suite(options).run(); }

void print_report(std::ostream& out, const VerifyReport& report) {
  char line[256];
  std::snprintf(line, sizeof line, "frdft verify seed=%llu max_n=%zu\n",
                static_cast<unsigned long long>(report.seed), report.max_n);
  out << line;
  std::size_t passed = 0;
  for (const auto& p : report.properties) {
    if (p.passed) ++passed;
    std::snprintf(line, sizeof line, "%s %-36s worst=%.3e %s tol=%.1e\n",
                  p.passed ? "PASS" : "FAIL", p.name.c_str(), p.worst,
                  p.comparison == ">" ? "need >" : "need <=", p.tolerance);
    out << line;
  }
  for (const auto& s : report.small_angle) {
    std::snprintf(line, sizeof line, "INFO frdft.small_angle n=%zu alpha=1e-06 deviation=%.3e\n",
                  s.n, s.deviation);
    out << line;
  }
  for (const auto& s : report.additivity) {
    std::snprintf(line, sizeof line,
                  "INFO frdft.additivity n=%zu alpha=%+.6f beta=%+.6f deviation=%.3e\n",
                  report.additivity_n, s.alpha, s.beta, s.deviation);
    out << line;
  }
  std::snprintf(line, sizeof line, "RESULT %s %zu/%zu\n",
                report.all_passed() ? "PASS" : "FAIL", passed, report.properties.size());
  out << line;
}

}  // namespace frdft::verify
