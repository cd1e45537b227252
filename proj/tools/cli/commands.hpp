// Copyright 2026 The dvm Authors.
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
#include <iosfwd>
#include <string>
#include <vector>

#include "dvm/error_bounds.hpp"
#include "dvm/transform.hpp"

namespace dvm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMismatch = 3;

/// Parses `args` (without the program name) and runs one subcommand:
/// transform, tables, errors, beams, bench or sfg. Results go to `out`
/// unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

enum class TableFormat { Csv, Markdown };

/// Tables of GDB counts for N = 4..4096: 1 complex, 2 real (r = 1 kernels),
/// 3 real (radius kernels).
std::string render_count_table(int table, TableFormat format);

struct ErrorRow {
  std::size_t n;
  double radix2_bound;
  double fft_bound;
  double direct_bound;
  double measured_max;
  double measured_mean;
};

/// One row per N = 4..n_max. Bounds use `model`; the measured columns come
/// from measure_forward_error with spec theta = 0.9 and r = 1.2 for the
/// radius kernels.
std::vector<ErrorRow> error_rows(TransformKind kind, std::size_t n_max, const ErrorModel& model,
                                 std::size_t trials, std::uint64_t seed);

struct BenchRow {
  std::size_t n;
  double fast_median_ns;
  double direct_median_ns;
};

/// Median wall time of `repetitions` timed runs (after one warmup) of the
/// fast transform and of the dense product with a prebuilt matrix.
BenchRow bench_size(TransformKind kind, std::size_t n, std::size_t repetitions, std::uint64_t seed);

}  // namespace dvm::cli
