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


#include "frdft/signal_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

namespace frdft::io {
namespace {

constexpr std::string_view kSignalHeader = "index,re,im";

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = line.find(',', pos);
    fields.push_back(line.substr(pos, comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return fields;
}

template <typename T>
bool parse_number(std::string_view text, T& value) {
  if (text.empty()) return false;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  // from_chars rejects a leading '+', which some writers emit.
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last;
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Signal read_signal(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError(1, "missing header \"index,re,im\"");
  if (strip_cr(line) != kSignalHeader) {
    throw ParseError(1, "expected header \"index,re,im\", got \"" + line + "\"");
  }

  Signal x;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = strip_cr(line);
    if (row.empty()) {
      // A blank final line is tolerated; a blank line mid-file is not.
      if (in.peek() == std::char_traits<char>::eof()) break;
      throw ParseError(line_no, "blank line");
    }
    const auto fields = split_fields(row);
    if (fields.size() != 3) {
      throw ParseError(line_no, "expected 3 fields, got " + std::to_string(fields.size()));
    }
    long long index = 0;
    if (!parse_number(fields[0], index)) {
      throw ParseError(line_no, "bad index \"" + std::string(fields[0]) + "\"");
    }
    if (index != static_cast<long long>(x.size())) {
      const std::string kind = index < static_cast<long long>(x.size())
                                   ? "duplicate or out-of-order"
                                   : "gap before";
      throw ParseError(line_no, kind + " index " + std::to_string(index) + ", expected " +
                                    std::to_string(x.size()));
    }
    double re = 0.0;
    double im = 0.0;
    if (!parse_number(fields[1], re) || !std::isfinite(re)) {
      throw ParseError(line_no, "bad real part \"" + std::string(fields[1]) + "\"");
    }
    if (!parse_number(fields[2], im) || !std::isfinite(im)) {
      throw ParseError(line_no, "bad imaginary part \"" + std::string(fields[2]) + "\"");
    }
    x.emplace_back(re, im);
  }
  if (x.empty()) throw ParseError(line_no, "signal has no samples");
  return x;
}

Signal read_signal(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  return read_signal(in);
}

void write_signal(std::ostream& out, std::span<const Complex> x) {
  out << kSignalHeader << '\n';
  for (std::size_t j = 0; j < x.size(); ++j) {
    out << j << ',' << format_double(x[j].real()) << ',' << format_double(x[j].imag())
        << '\n';
  }
}

void write_signal(const std::filesystem::path& path, std::span<const Complex> x) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot open " + path.string() + " for writing");
  write_signal(out, x);
}

void write_matrix(std::ostream& out, const TransformMatrix& m) {
  out << "j,k,re,im\n";
  for (std::size_t j = 0; j < m.n(); ++j) {
    for (std::size_t k = 0; k < m.n(); ++k) {
      const Complex v = m.at(j, k);
      out << j << ',' << k << ',' << format_double(v.real()) << ','
          << format_double(v.imag()) << '\n';
    }
  }
}

void write_sweep(std::ostream& out, const chirp::SweepResult& sweep) {
  out << "alpha,concentration\n";
  for (std::size_t i = 0; i < sweep.grid.size(); ++i) {
    out << format_double(sweep.grid[i]) << ',';
    if (sweep.concentration[i]) {
      out << format_double(*sweep.concentration[i]);
    } else {
      out << "nan";
    }
    out << '\n';
  }
  out << "argmax," << format_double(sweep.argmax_alpha) << '\n';
}

}  // namespace frdft::io
