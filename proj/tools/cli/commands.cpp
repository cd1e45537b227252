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

#include "cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "dvm/beams.hpp"
#include "dvm/complexity.hpp"
#include "dvm/csv.hpp"
#include "dvm/error.hpp"
#include "dvm/sfg.hpp"

namespace dvm::cli {

namespace {

constexpr std::size_t kTableMin = 4;
constexpr std::size_t kTableMax = 4096;

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string join(const std::vector<std::string>& cells, TableFormat format) {
  std::string line = format == TableFormat::Markdown ? "| " : "";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) line += format == TableFormat::Markdown ? " | " : ",";
    line += cells[i];
  }
  if (format == TableFormat::Markdown) line += " |";
  return line + "\n";
}

std::string render(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
                   TableFormat format) {
  std::string text = join(header, format);
  if (format == TableFormat::Markdown) {
    text += join(std::vector<std::string>(header.size(), "---"), format);
  }
  for (const auto& row : rows) text += join(row, format);
  return text;
}

std::optional<TableFormat> parse_table_format(const std::string& s) {
  if (s == "csv") return TableFormat::Csv;
  if (s == "markdown") return TableFormat::Markdown;
  return std::nullopt;
}

// Options shared by every subcommand that needs a spec.
struct SpecOptions {
  std::string kind = "vanc";
  std::size_t n = 0;
  std::optional<double> theta;
  std::optional<double> freq;
  std::optional<double> tau;
  double radius = 1.0;

  void attach(CLI::App* cmd, bool n_required) {
    cmd->add_option("--kind", kind, "vanc | vancc | vancr | vanccr")->capture_default_str();
    auto* n_opt = cmd->add_option("--n", n, "matrix size, a power of two");
    if (n_required) n_opt->required();
    cmd->add_option("--theta", theta, "rotation of node v0 in radians");
    cmd->add_option("--freq", freq, "temporal frequency in Hz (with --tau)");
    cmd->add_option("--tau", tau, "delay in seconds (with --freq)");
    cmd->add_option("--radius", radius, "circle radius r >= 1")->capture_default_str();
  }

  TransformKind parsed_kind() const {
    const auto k = parse_kind(kind);
    if (!k) throw Error(ErrorKind::InvalidArgument, "unknown kind '" + kind + "'");
    return *k;
  }

  VanSpec spec() const {
    if (freq.has_value() != tau.has_value()) {
      throw Error(ErrorKind::InvalidArgument, "--freq and --tau must be given together");
    }
    if (freq && theta) throw Error(ErrorKind::InvalidArgument, "use either --theta or --freq/--tau");
    if (freq) return spec_from_delay(n, *freq, *tau, radius);
    return make_spec(n, theta.value_or(0.0), radius, direction_of(parsed_kind()));
  }
};

// Writes to --output when given, otherwise to the command's stream.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot open output file " + path);
  file << text;
  if (!file) throw Error(ErrorKind::InvalidArgument, "failed writing " + path);
}

std::vector<std::size_t> powers_of_two(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> sizes;
  for (std::size_t n = lo; n <= hi; n *= 2) sizes.push_back(n);
  return sizes;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

template <class F>
double time_ns(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::nano>(stop - start).count();
}

}  // namespace

std::string render_count_table(int table, TableFormat format) {
  using K = TransformKind;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header;
  const auto s = [](std::uint64_t v) { return std::to_string(v); };
  switch (table) {
    case 1:
      header = {"N", "direct_add_mult", "adds_all_kinds", "mults_vanc_vancc", "mults_vancr_vanccr"};
      for (std::size_t n : powers_of_two(kTableMin, kTableMax)) {
        const auto d = direct_count(n, Arithmetic::Complex);
        const auto c = formula_count(K::VanC, n, Arithmetic::Complex);
        const auto r = formula_count(K::VanCR, n, Arithmetic::Complex);
        rows.push_back({s(n), s(d.multiplications), s(c.additions), s(c.multiplications), s(r.multiplications)});
      }
      break;
    case 2:
    case 3: {
      const K kind = table == 2 ? K::VanC : K::VanCR;
      const std::string tag = table == 2 ? "vanc_vancc" : "vancr_vanccr";
      header = {"N", "direct_add", "adds_" + tag, "direct_mult", "mults_" + tag};
      for (std::size_t n : powers_of_two(kTableMin, kTableMax)) {
        const auto d = direct_count(n, Arithmetic::Real);
        const auto c = formula_count(kind, n, Arithmetic::Real);
        rows.push_back({s(n), s(d.additions), s(c.additions), s(d.multiplications), s(c.multiplications)});
      }
      break;
    }
    default:
      throw Error(ErrorKind::InvalidArgument, "table must be 1, 2 or 3");
  }
  return render(header, rows, format);
}

std::vector<ErrorRow> error_rows(TransformKind kind, std::size_t n_max, const ErrorModel& model,
                                 std::size_t trials, std::uint64_t seed) {
  if (n_max < kTableMin || !is_power_of_two(n_max)) {
    throw Error(ErrorKind::NonPowerOfTwo, "--n must be a power of two >= 4");
  }
  if (trials == 0) throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
  const WeightSign sign = direction_of(kind) == Direction::Counterclockwise ? WeightSign::Plus : WeightSign::Minus;
  std::vector<ErrorRow> rows;
  for (std::size_t n : powers_of_two(kTableMin, n_max)) {
    const VanSpec spec = make_spec(n, 0.9, allows_radius(kind) ? 1.2 : 1.0, direction_of(kind));
    const ErrorSummary m = measure_forward_error(kind, spec, trials, seed);
    rows.push_back({n, radix2_bound(n, model, sign), fft_bound(n, model), direct_bound(n, model), m.max_rel_error,
                    m.mean_rel_error});
  }
  return rows;
}

BenchRow bench_size(TransformKind kind, std::size_t n, std::size_t repetitions, std::uint64_t seed) {
  if (repetitions == 0) throw Error(ErrorKind::InvalidArgument, "repetitions must be at least 1");
  const VanSpec spec = make_spec(n, 0.9, allows_radius(kind) ? 1.2 : 1.0, direction_of(kind));
  const FastTransform fast(kind, spec);
  const DenseMatrix matrix = explicit_matrix(spec);
  const cvec z = random_vector(n, seed);

  cvec sink;
  std::vector<double> fast_ns;
  std::vector<double> direct_ns;
  sink = fast.apply(z);
  sink = matvec(matrix, z);
  for (std::size_t i = 0; i < repetitions; ++i) {
    fast_ns.push_back(time_ns([&] { sink = fast.apply(z); }));
    direct_ns.push_back(time_ns([&] { sink = matvec(matrix, z); }));
  }
  return {n, median(fast_ns), median(direct_ns)};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radix-2 fast Vandermonde products on equally spaced circular nodes", "dvm"};
  app.require_subcommand(1);

  // transform
  SpecOptions t_spec;
  std::string t_input;
  std::string t_output;
  bool t_direct = false;
  auto* t_cmd = app.add_subcommand("transform", "multiply a CSV vector by the Vandermonde matrix");
  t_spec.attach(t_cmd, true);
  t_cmd->add_option("--input", t_input, "CSV file with one re,im pair per line")->required();
  t_cmd->add_option("--output", t_output, "output CSV (stdout when omitted)");
  t_cmd->add_flag("--direct", t_direct, "use the dense O(N^2) product");

  // tables
  int table = 1;
  std::string table_format = "csv";
  auto* tables_cmd = app.add_subcommand("tables", "gain-delay-block count tables");
  tables_cmd->add_option("--table", table, "1 (complex), 2 (real), 3 (real, radius kernels)")->required();
  tables_cmd->add_option("--format", table_format, "csv | markdown")->capture_default_str();

  // errors
  std::string e_kind = "vanc";
  std::size_t e_n = 4096;
  double e_u = 1e-15;
  double e_mu = 1e-15;
  std::size_t e_trials = 10;
  std::uint64_t e_seed = 1;
  std::string e_format = "csv";
  auto* errors_cmd = app.add_subcommand("errors", "error bounds and measured forward errors");
  errors_cmd->add_option("--kind", e_kind)->capture_default_str();
  errors_cmd->add_option("--n", e_n, "largest N")->capture_default_str();
  errors_cmd->add_option("--u", e_u, "unit roundoff for the bound columns")->capture_default_str();
  errors_cmd->add_option("--mu", e_mu, "weight error for the bound columns")->capture_default_str();
  errors_cmd->add_option("--trials", e_trials, "random inputs per N")->capture_default_str();
  errors_cmd->add_option("--seed", e_seed)->capture_default_str();
  errors_cmd->add_option("--format", e_format, "csv | markdown")->capture_default_str();

  // beams
  std::size_t b_n = 8;
  double b_freq = 0.0;
  double b_tau = 0.0;
  std::size_t b_grid = 181;
  std::string b_output;
  auto* beams_cmd = app.add_subcommand("beams", "true-time-delay filterbank beam responses");
  beams_cmd->add_option("--n", b_n)->required();
  beams_cmd->add_option("--freq", b_freq)->required();
  beams_cmd->add_option("--tau", b_tau)->required();
  beams_cmd->add_option("--grid", b_grid, "spatial frequency grid points over [-pi, pi]")->capture_default_str();
  beams_cmd->add_option("--output", b_output);

  // bench
  std::string bench_kind = "vanc";
  std::size_t bench_n = 4096;
  std::size_t bench_trials = 5;
  std::uint64_t bench_seed = 1;
  auto* bench_cmd = app.add_subcommand("bench", "fast vs dense wall time for N = 2..n");
  bench_cmd->add_option("--kind", bench_kind)->capture_default_str();
  bench_cmd->add_option("--n", bench_n, "largest N")->capture_default_str();
  bench_cmd->add_option("--trials", bench_trials, "timed repetitions per N")->capture_default_str();
  bench_cmd->add_option("--seed", bench_seed)->capture_default_str();

  // sfg
  SpecOptions g_spec;
  std::string g_format = "dot";
  std::string g_output;
  auto* sfg_cmd = app.add_subcommand("sfg", "export the signal flow graph");
  g_spec.attach(sfg_cmd, true);
  sfg_cmd->add_option("--format", g_format, "dot | json")->capture_default_str();
  sfg_cmd->add_option("--output", g_output);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "dvm: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*t_cmd) {
      const TransformKind kind = t_spec.parsed_kind();
      const VanSpec spec = t_spec.spec();
      check_compatible(kind, spec);
      std::ifstream in(t_input);
      if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open input file " + t_input);
      const cvec z = read_complex_csv(in);
      const cvec y = t_direct ? direct_matvec(z, spec) : transform(kind, z, spec);
      std::ostringstream os;
      write_complex_csv(os, y);
      emit(t_output, os.str(), out);
    } else if (*tables_cmd) {
      const auto format = parse_table_format(table_format);
      if (!format) throw Error(ErrorKind::InvalidArgument, "format must be csv or markdown");
      out << render_count_table(table, *format);
    } else if (*errors_cmd) {
      const auto format = parse_table_format(e_format);
      if (!format) throw Error(ErrorKind::InvalidArgument, "format must be csv or markdown");
      const auto kind = parse_kind(e_kind);
      if (!kind) throw Error(ErrorKind::InvalidArgument, "unknown kind '" + e_kind + "'");
      const ErrorModel model{e_u, e_mu, e_mu};
      validate(model);
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : error_rows(*kind, e_n, model, e_trials, e_seed)) {
        rows.push_back({std::to_string(r.n), fmt("%.6g", r.radix2_bound), fmt("%.6g", r.fft_bound),
                        fmt("%.6g", r.direct_bound), fmt("%.6g", r.measured_max), fmt("%.6g", r.measured_mean)});
      }
      out << render({"N", "radix2_bound", "fft_bound", "direct_bound", "measured_max", "measured_mean"}, rows,
                    *format);
    } else if (*beams_cmd) {
      std::ostringstream os;
      os << "k,omega_x,re,im,magnitude_db\n";
      char buf[160];
      for (const auto& beam : beam_responses(b_n, b_freq, b_tau, b_grid)) {
        for (std::size_t g = 0; g < beam.omega_x.size(); ++g) {
          std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g,%.17g\n", beam.k, beam.omega_x[g],
                        beam.response[g].real(), beam.response[g].imag(), beam.magnitude_db[g]);
          os << buf;
        }
      }
      emit(b_output, os.str(), out);
    } else if (*bench_cmd) {
      const auto kind = parse_kind(bench_kind);
      if (!kind) throw Error(ErrorKind::InvalidArgument, "unknown kind '" + bench_kind + "'");
      if (bench_n < 2 || !is_power_of_two(bench_n)) {
        throw Error(ErrorKind::NonPowerOfTwo, "--n must be a power of two >= 2");
      }
      out << "N,fast_median_ns,direct_median_ns,speedup\n";
      char buf[160];
      for (std::size_t n : powers_of_two(2, bench_n)) {
        const BenchRow row = bench_size(*kind, n, bench_trials, bench_seed);
        std::snprintf(buf, sizeof buf, "%zu,%.0f,%.0f,%.3f\n", row.n, row.fast_median_ns, row.direct_median_ns,
                      row.direct_median_ns / row.fast_median_ns);
        out << buf;
      }
    } else if (*sfg_cmd) {
      if (g_format != "dot" && g_format != "json") {
        throw Error(ErrorKind::InvalidArgument, "format must be dot or json");
      }
      const SfgGraph graph = build_sfg(g_spec.parsed_kind(), g_spec.spec());
      emit(g_output, g_format == "dot" ? export_dot(graph) : export_json(graph), out);
    }
  } catch (const Error& e) {
    err << "dvm: " << e.what() << "\n";
    const bool mismatch = e.kind() == ErrorKind::SpecMismatch || e.kind() == ErrorKind::NotRealizable;
    return mismatch ? kExitMismatch : kExitUsage;
  }
  return kExitOk;
}

}  // namespace dvm::cli
