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

#include "dvm/error_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "dvm/error.hpp"

namespace dvm {

ErrorModel ErrorModel::machine(double weight_ulps) {
  ErrorModel m;
  m.mu_plus = weight_ulps * m.u;
  m.mu_minus = weight_ulps * m.u;
  return m;
}

ErrorModel ErrorModel::nominal() { return {1e-15, 1e-15, 1e-15}; }

void validate(const ErrorModel& model) {
  if (!(model.u >= 0.0 && model.u < 1e-6)) {
    throw Error(ErrorKind::InvalidArgument, "unit roundoff must lie in [0, 1e-6)");
  }
  if (!(model.mu_plus >= 0.0) || !(model.mu_minus >= 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "weight errors must be non-negative");
  }
}

double gamma(std::uint64_t k, const ErrorModel& model) {
  validate(model);
  const double ku = static_cast<double>(k) * model.u;
  if (ku >= 1.0) {
    throw Error(ErrorKind::DivergentGamma, "k*u = " + std::to_string(ku) + " >= 1");
  }
  return ku / (1.0 - ku);
}

double eta(double mu, const ErrorModel& model) { return mu + gamma(4, model) * (1.0 + mu); }

namespace {

unsigned checked_log2(std::size_t n) {
  if (n < 2 || !is_power_of_two(n)) {
    throw Error(ErrorKind::NonPowerOfTwo, "n = " + std::to_string(n) + " is not 2^t with t >= 1");
  }
  return log2_exact(n);
}

double staged_bound(unsigned t, double per_stage, std::size_t n) {
  const double tv = t * per_stage;
  if (tv >= 1.0) {
    throw Error(ErrorKind::BoundDiverges, "t * nu = " + std::to_string(tv) + " >= 1");
  }
  return tv / (1.0 - tv) * std::sqrt(static_cast<double>(n));
}

}  // namespace

double radix2_bound(std::size_t n, const ErrorModel& model, WeightSign sign) {
  const unsigned t = checked_log2(n);
  const double mu = sign == WeightSign::Plus ? model.mu_plus : model.mu_minus;
  const double e = eta(mu, model);
  const double g3 = gamma(3, model);
  const double nu = e * g3 + e + g3;
  return staged_bound(t, nu, n);
}

double fft_bound(std::size_t n, const ErrorModel& model) {
  const unsigned t = checked_log2(n);
  return staged_bound(t, eta(model.mu_plus, model), n);
}

double direct_bound(std::size_t n, const ErrorModel& model) {
  return gamma(n + 2, model) * std::sqrt(static_cast<double>(n));
}

double relative_error(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::LengthMismatch, "vector sizes differ");
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += std::norm(a[i] - b[i]);
    den += std::norm(b[i]);
  }
  if (den == 0.0) return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::sqrt(num / den);
}

cvec random_vector(std::size_t n, std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::mt19937_64 gen(seq);
  // Hand-rolled [0,1) draw: uniform_real_distribution is not portable across
  // standard libraries, and fixed seeds must give fixed vectors.
  auto draw = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
  cvec z(n);
  for (auto& v : z) {
    const double re = draw();
    v = {re, draw()};
  }
  return z;
}

ErrorSummary measure_forward_error(TransformKind kind, const VanSpec& spec, std::size_t trials,
                                   std::uint64_t rng_seed) {
  if (trials == 0) throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
  const FastTransform fast(kind, spec);
  const DenseMatrix oracle = explicit_matrix(spec);
  ErrorSummary s;
  double sum = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    const cvec z = random_vector(spec.n(), rng_seed, i);
    const double err = relative_error(fast.apply(z), matvec(oracle, z));
    s.max_rel_error = std::max(s.max_rel_error, err);
    sum += err;
  }
  s.mean_rel_error = sum / static_cast<double>(trials);
  return s;
}

}  // namespace dvm
