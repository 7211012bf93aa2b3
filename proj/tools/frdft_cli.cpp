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


// frdft: command-line front end for the fractional DFT library.
//
// Exit codes: 0 success, 1 verification failure, 2 parse/usage error,
// 3 conditioning error, 4 resource cap exceeded.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "frdft/bench.hpp"
#include "frdft/chirp_lab.hpp"
#include "frdft/errors.hpp"
#include "frdft/fractional.hpp"
#include "frdft/signal_io.hpp"
#include "frdft/verify.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kConditioning = 3,
  kResourceCap = 4,
};

using frdft::InvalidInput;

// Radians, or degrees with a "deg:" prefix.
double parse_angle(const std::string& text) {
  std::string body = text;
  double scale = 1.0;
  if (body.rfind("deg:", 0) == 0) {
    body = body.substr(4);
    scale = std::numbers::pi / 180.0;
  }
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(body, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != body.size() || !std::isfinite(value)) {
    throw InvalidInput("bad angle \"" + text + "\"");
  }
  return value * scale;
}

// "start:stop:count", angles as parse_angle.
std::vector<double> parse_grid(const std::string& spec) {
  const auto first = spec.find(':');
  const auto second = first == std::string::npos ? first : spec.find(':', first + 1);
  if (second == std::string::npos) {
    throw InvalidInput("grid must be start:stop:count, got \"" + spec + "\"");
  }
  const double start = parse_angle(spec.substr(0, first));
  const double stop = parse_angle(spec.substr(first + 1, second - first - 1));
  const std::string count_text = spec.substr(second + 1);
  std::size_t used = 0;
  long long count = 0;
  try {
    count = std::stoll(count_text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != count_text.size() || count < 1) {
    throw InvalidInput("grid count must be a positive integer, got \"" + count_text + "\"");
  }
  if (count == 1 ? start != stop : !(stop > start)) {
    throw InvalidInput("grid needs stop > start (or start == stop for a single point)");
  }
  return frdft::chirp::uniform_grid(start, stop, static_cast<std::size_t>(count));
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long long n = 0;
    try {
      n = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw InvalidInput("bad size \"" + item + "\"");
    sizes.push_back(static_cast<std::size_t>(n));
  }
  return sizes;
}

frdft::FrdftConfig config_from_env() {
  frdft::FrdftConfig config;
  if (const char* cap = std::getenv("FRFT_MATRIX_CAP")) {
    const auto parsed = parse_sizes(cap);
    if (parsed.size() != 1) throw InvalidInput("FRFT_MATRIX_CAP must be a single integer");
    config.matrix_cap = parsed.front();
  }
  return config;
}

// Writes through `write` to `path`, or stdout when the path is empty or "-".
template <typename Writer>
void emit(const std::string& path, Writer&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot open " + path + " for writing");
  write(out);
  if (!out) throw InvalidInput("failed writing " + path);
}

frdft::Signal load(const std::string& path) {
  if (path == "-") return frdft::io::read_signal(std::cin);
  return frdft::io::read_signal(std::filesystem::path(path));
}

struct TransformArgs {
  std::string input;
  std::string alpha;
  std::string mode = "raw";
  std::string output;
};

int cmd_transform(const TransformArgs& args) {
  const frdft::Signal x = load(args.input);
  const double alpha = parse_angle(args.alpha);
  const auto mode = args.mode == "decomposed" ? frdft::ApplyMode::decomposed
                                              : frdft::ApplyMode::raw;
  const frdft::Signal y = frdft::frdft_apply(x, alpha, mode, config_from_env());
  emit(args.output, [&](std::ostream& out) { frdft::io::write_signal(out, y); });
  return kOk;
}

struct MatrixArgs {
  long long n = 0;
  std::string alpha;
  std::string output;
};

int cmd_matrix(const MatrixArgs& args) {
  if (args.n < 1) throw InvalidInput("matrix: n must be at least 1");
  const double alpha = parse_angle(args.alpha);
  const auto m =
      frdft::frdft_matrix(static_cast<std::size_t>(args.n), alpha, config_from_env());
  emit(args.output, [&](std::ostream& out) { frdft::io::write_matrix(out, m); });
  return kOk;
}

struct SweepArgs {
  std::string input;
  std::string grid;
  std::size_t window = 1;
  std::string output;
};

int cmd_sweep(const SweepArgs& args) {
  const std::vector<double> grid =
      args.grid.empty() ? frdft::chirp::default_grid() : parse_grid(args.grid);
  const frdft::Signal x = load(args.input);
  const auto sweep = frdft::chirp::localization_sweep(x, grid, args.window, config_from_env());
  emit(args.output, [&](std::ostream& out) { frdft::io::write_sweep(out, sweep); });
  return kOk;
}

int cmd_verify(const frdft::verify::VerifyOptions& options) {
  const auto report = frdft::verify::run_verify(options);
  frdft::verify::print_report(std::cout, report);
  return report.all_passed() ? kOk : kVerifyFailed;
}

struct BenchArgs {
  std::string sizes;
  std::optional<std::string> matrix_sizes;
  int repeats = 5;
  std::string output;
};

int cmd_bench(const BenchArgs& args) {
  frdft::bench::BenchOptions options;
  options.config = config_from_env();
  options.sizes = parse_sizes(args.sizes);
  options.repeats = args.repeats;
  if (args.matrix_sizes) {
    options.matrix_sizes = parse_sizes(*args.matrix_sizes);
  } else {
    for (std::size_t n : options.sizes) {
      if (n <= options.config.matrix_cap) options.matrix_sizes.push_back(n);
    }
  }
  const auto rows = frdft::bench::run_bench(options);
  emit(args.output, [&](std::ostream& out) { frdft::bench::write_report(out, rows); });
  for (const char* path : {"apply", "matrix"}) {
    if (const auto slope = frdft::bench::fitted_slope(rows, path)) {
      std::cerr << "fitted log-log slope (" << path << "): " << *slope << '\n';
    }
  }
  return kOk;
}

struct GenerateArgs {
  std::size_t n = 0;
  double f0 = 0.0;
  double q = 0.0;
  std::string output;
};

int cmd_generate(const GenerateArgs& args) {
  const frdft::Signal x = frdft::chirp::make_chirp(args.n, args.f0, args.q);
  emit(args.output, [&](std::ostream& out) { frdft::io::write_signal(out, x); });
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional discrete Fourier transform toolkit"};
  app.require_subcommand(1);

  TransformArgs transform;
  auto* transform_cmd = app.add_subcommand("transform", "Apply the fractional DFT to a signal");
  transform_cmd->add_option("-i,--input", transform.input, "Signal CSV (index,re,im); - for stdin")
      ->required();
  transform_cmd->add_option("-a,--alpha", transform.alpha, "Rotation angle (radians, or deg:<x>)")
      ->required();
  transform_cmd->add_option("-m,--mode", transform.mode, "raw or decomposed")
      ->check(CLI::IsMember({"raw", "decomposed"}));
  transform_cmd->add_option("-o,--output", transform.output, "Output CSV (default stdout)");

  MatrixArgs matrix;
  auto* matrix_cmd = app.add_subcommand("matrix", "Write the closed-form transform matrix");
  matrix_cmd->add_option("-n,--size", matrix.n, "Dimension N")->required();
  matrix_cmd->add_option("-a,--alpha", matrix.alpha, "Rotation angle (radians, or deg:<x>)")
      ->required();
  matrix_cmd->add_option("-o,--output", matrix.output, "Output CSV (default stdout)");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Localization sweep over rotation angles");
  sweep_cmd->add_option("-i,--input", sweep.input, "Signal CSV; - for stdin")->required();
  sweep_cmd->add_option("-g,--grid", sweep.grid,
                        "start:stop:count in radians (default 0.01:pi-0.01:181)");
  sweep_cmd->add_option("-w,--window", sweep.window, "Concentration window in bins")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("-o,--output", sweep.output, "Output CSV (default stdout)");

  frdft::verify::VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant verification suite");
  verify_cmd->add_option("--max-n", verify.max_n, "Largest N for size sweeps")
      ->check(CLI::Range(std::size_t{4}, std::size_t{1} << 16));
  verify_cmd->add_option("--seed", verify.seed, "RNG seed");
  verify_cmd->add_flag("--fault-normalization", verify.corrupt_normalization)
      ->group("");  // test hook, hidden from --help

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time the apply and matrix paths");
  bench_cmd->add_option("-s,--sizes", bench.sizes, "Comma-separated powers of two")->required();
  bench_cmd->add_option("--matrix-sizes", bench.matrix_sizes,
                        "Sizes for the matrix path (default: --sizes up to the matrix cap)");
  bench_cmd->add_option("-r,--repeats", bench.repeats, "Runs per size (median reported)")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("-o,--output", bench.output, "Output CSV (default stdout)");

  GenerateArgs generate;
  auto* generate_cmd = app.add_subcommand("generate", "Write a tone or chirp signal");
  generate_cmd->add_option("-n,--size", generate.n, "Number of samples")
      ->required()
      ->check(CLI::PositiveNumber);
  generate_cmd->add_option("--f0", generate.f0, "Start frequency, cycles per record");
  generate_cmd->add_option("-q,--rate", generate.q, "Chirp rate (0 for a pure tone)");
  generate_cmd->add_option("-o,--output", generate.output, "Output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*transform_cmd) return cmd_transform(transform);
    if (*matrix_cmd) return cmd_matrix(matrix);
    if (*sweep_cmd) return cmd_sweep(sweep);
    if (*verify_cmd) return cmd_verify(verify);
    if (*bench_cmd) return cmd_bench(bench);
    if (*generate_cmd) return cmd_generate(generate);
  } catch (const frdft::ConditioningError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConditioning;
  } catch (const frdft::ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const frdft::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
