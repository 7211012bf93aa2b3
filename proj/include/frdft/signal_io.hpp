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
#include <filesystem>
#include <iosfwd>
#include <string>

#include "frdft/chirp_lab.hpp"
#include "frdft/core.hpp"
#include "frdft/errors.hpp"
#include "frdft/fractional.hpp"

namespace frdft::io {

// Malformed signal file; line() is 1-based, counting the header as line 1.
class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InvalidInput("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Reads the "index,re,im" CSV signal format. Indices must run 0..N-1 in
/// order with no gaps or duplicates, and N must be at least 1.
Signal read_signal(std::istream& in);
Signal read_signal(const std::filesystem::path& path);

// Writes "index,re,im" with 17 significant digits so doubles round-trip.
void write_signal(std::ostream& out, std::span<const Complex> x);
void write_signal(const std::filesystem::path& path, std::span<const Complex> x);

// Header "j,k,re,im" then N^2 rows in row-major order.
void write_matrix(std::ostream& out, const TransformMatrix& m);

// Header "alpha,concentration", one row per grid point ("nan" where the
// point failed), then "argmax,<alpha>".
void write_sweep(std::ostream& out, const chirp::SweepResult& sweep);

// Shortest-exact decimal for a double, "%.17g".
std::string format_double(double v);

}  // namespace frdft::io
