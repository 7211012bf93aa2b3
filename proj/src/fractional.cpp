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


#include "frdft/fractional.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "frdft/errors.hpp"

namespace frdft {
namespace {

constexpr double kPi = std::numbers::pi;

// exp(-i pi q j^2 / n) for j in [0, n).
std::vector<Complex> chirp_factors(std::size_t n, double q) {
  std::vector<Complex> c(n);
  const double nd = static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double jd = static_cast<double>(j);
    const double theta = -kPi * q * jd * jd / nd;
    c[j] = {std::cos(theta), std::sin(theta)};
  }
  return c;
}

Signal raw_apply(std::span<const Complex> x, double alpha, const FrdftConfig& config) {
  const ChirpRates rates = chirp_rates(alpha, config);
  Signal y = quadratic_phase(x, rates.q1);
  y = dft(y);
  y = quadratic_phase(y, rates.q2);
  y = idft(y);
  return quadratic_phase(y, rates.q1);
}

}  // namespace

ChirpRates chirp_rates(double alpha, const FrdftConfig& config) {
  const double q1 = std::tan(alpha / 2.0);
  if (!std::isfinite(alpha) || !(std::abs(alpha) < kPi) ||
      !(std::abs(q1) <= config.conditioning_bound)) {
    std::ostringstream msg;
    msg << "alpha = " << std::setprecision(17) << alpha
        << " is ill-conditioned for the raw chirp path: need alpha in (-pi, pi) and"
        << " |tan(alpha/2)| <= " << std::setprecision(6) << config.conditioning_bound;
    throw ConditioningError(msg.str(), config.conditioning_bound);
  }
  return {q1, std::sin(alpha)};
}

Signal quadratic_phase(std::span<const Complex> x, double q) {
  if (q == 0.0) return Signal(x.begin(), x.end());
  const std::vector<Complex> c = chirp_factors(x.size(), q);
  Signal y(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) y[j] = c[j] * x[j];
  return y;
}

Signal frdft_apply(std::span<const Complex> x, double alpha, ApplyMode mode,
                   const FrdftConfig& config) {
  if (x.empty()) throw InvalidInput("frdft_apply: signal must have at least one sample");
  if (mode == ApplyMode::raw) return raw_apply(x, alpha, config);

  if (!std::isfinite(alpha)) throw InvalidInput("frdft_apply: alpha must be finite");
  const AngleDecomposition parts = reduce_angle(alpha);
  Signal y = parts.residual == 0.0 ? Signal(x.begin(), x.end())
                                   : raw_apply(x, parts.residual, config);
  switch (parts.quarter_turns) {
    case 1:
      return dft(y);
    case 2:
      return parity(y);
    case 3:
      return idft(y);
    default:
      return y;
  }
}

TransformMatrix::TransformMatrix(std::size_t n) : n_(n), entries_(n * n) {}

TransformMatrix TransformMatrix::identity(std::size_t n) {
  TransformMatrix m(n);
  for (std::size_t j = 0; j < n; ++j) m.at(j, j) = 1.0;
  return m;
}

TransformMatrix TransformMatrix::dft_kernel(std::size_t n) {
  TransformMatrix m(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const double theta =
          -2.0 * kPi * static_cast<double>((j * k) % n) / static_cast<double>(n);
      m.at(j, k) = scale * Complex{std::cos(theta), std::sin(theta)};
    }
  }
  return m;
}

TransformMatrix TransformMatrix::operator*(const TransformMatrix& rhs) const {
  if (rhs.n_ != n_) throw InvalidInput("TransformMatrix: dimension mismatch");
  TransformMatrix out(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    for (std::size_t l = 0; l < n_; ++l) {
      const Complex a = at(j, l);
      for (std::size_t k = 0; k < n_; ++k) out.at(j, k) += a * rhs.at(l, k);
    }
  }
  return out;
}

TransformMatrix TransformMatrix::adjoint() const {
  TransformMatrix out(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    for (std::size_t k = 0; k < n_; ++k) out.at(k, j) = std::conj(at(j, k));
  }
  return out;
}

double max_abs_diff(const TransformMatrix& a, const TransformMatrix& b) {
  return max_abs_diff(a.entries(), b.entries());
}

TransformMatrix frdft_matrix(std::size_t n, double alpha, const FrdftConfig& config) {
  if (n == 0) throw InvalidInput("frdft_matrix: n must be at least 1");
  if (n > config.matrix_cap) {
    throw ResourceError("frdft_matrix: n = " + std::to_string(n) +
                        " exceeds the matrix size cap of " +
                        std::to_string(config.matrix_cap));
  }
  const ChirpRates rates = chirp_rates(alpha, config);

  const std::vector<Complex> outer = chirp_factors(n, rates.q1);
  const std::vector<Complex> inner = chirp_factors(n, rates.q2);
  // exp(-2 pi i r / n); the cross term exp(-i pi 2 m (k - j) / n) is an n-th root.
  std::vector<Complex> roots(n);
  for (std::size_t r = 0; r < n; ++r) {
    const double theta = -2.0 * kPi * static_cast<double>(r) / static_cast<double>(n);
    roots[r] = {std::cos(theta), std::sin(theta)};
  }

  const double inv_n = 1.0 / static_cast<double>(n);
  TransformMatrix f(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      // (k - j) mod n, kept non-negative.
      const std::size_t shift = (k + n - j) % n;
      Complex acc{};
      std::size_t r = 0;
      for (std::size_t m = 0; m < n; ++m) {
        acc += inner[m] * roots[r];
        r += shift;
        if (r >= n) r -= n;
      }
      f.at(j, k) = inv_n * outer[j] * outer[k] * acc;
    }
  }
  return f;
}

Signal apply_matrix(const TransformMatrix& m, std::span<const Complex> x) {
  if (m.n() != x.size()) {
    throw InvalidInput("apply_matrix: matrix is " + std::to_string(m.n()) +
                       "x" + std::to_string(m.n()) + " but signal has " +
                       std::to_string(x.size()) + " samples");
  }
  Signal y(x.size());
  for (std::size_t j = 0; j < m.n(); ++j) {
    const auto row = m.row(j);
    Complex acc{};
    for (std::size_t k = 0; k < row.size(); ++k) acc += row[k] * x[k];
    y[j] = acc;
  }
  return y;
}

RootSum root_sum(std::int64_t n, std::int64_t k) {
  if (n < 1) throw InvalidInput("root_sum: n must be at least 1");
  // zeta^{2n} == 1, so each exponent s^2 is reduced mod 2n in exact integers.
  const std::int64_t period = 2 * n;
  Complex acc{};
  for (std::int64_t s = k; s < k + n; ++s) {
    const std::int64_t r = ((s % period) * (s % period)) % period;
    const double theta = -kPi * static_cast<double>(r) / static_cast<double>(n);
    acc += Complex{std::cos(theta), std::sin(theta)};
  }
  return {n, k, acc};
}

Complex sigma(std::int64_t n) {
  if (n < 1) throw InvalidInput("sigma: n must be at least 1");
  if (n % 2 != 0) {
    throw UnsupportedParity("sigma: n = " + std::to_string(n) +
                            " is odd; the root-sum phase is only defined for even n");
  }
  return root_sum(n, 0).value / std::sqrt(static_cast<double>(n));
}

AngleDecomposition reduce_angle(double alpha) {
  constexpr double kQuarter = kPi / 2.0;
  constexpr double kEighth = kPi / 4.0;
  double turns = std::floor(alpha / kQuarter + 0.5);
  double residual = alpha - turns * kQuarter;
  if (residual >= kEighth) {
    turns += 1.0;
    residual -= kQuarter;
  } else if (residual < -kEighth) {
    turns -= 1.0;
    residual += kQuarter;
  }
  const double wrapped = std::fmod(turns, 4.0);
  int k = static_cast<int>(wrapped);
  if (k < 0) k += 4;
  return {k, residual};
}

}  // namespace frdft
