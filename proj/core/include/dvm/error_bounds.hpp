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
#include <limits>
#include <span>

#include "dvm/transform.hpp"

namespace dvm {

/// Roundoff parameters: unit roundoff u and the accuracy of the computed
/// twiddle weights, |w_hat - w| <= mu_plus (counterclockwise) or mu_minus
/// (clockwise).
struct ErrorModel {
  double u = std::numeric_limits<double>::epsilon() / 2;
  double mu_plus = 0.0;
  double mu_minus = 0.0;

  /// Machine roundoff with both weight errors set to `weight_ulps` * u.
  static ErrorModel machine(double weight_ulps = 8.0);
  /// The nominal u = mu = 1e-15 setting used for the published bound table.
  static ErrorModel nominal();
};

enum class WeightSign { Plus, Minus };

/// Throws InvalidArgument for u outside [0, 1e-6) or negative mu.
void validate(const ErrorModel& model);

/// gamma_k = k*u / (1 - k*u). Throws DivergentGamma when k*u >= 1.
double gamma(std::uint64_t k, const ErrorModel& model);

/// eta = mu + gamma_4 (1 + mu).
double eta(double mu, const ErrorModel& model);

/// Forward error bound of the radix-2 algorithms:
///   nu = eta*gamma_3 + eta + gamma_3,  bound = t*nu / (1 - t*nu) * sqrt(N).
/// Throws NonPowerOfTwo or BoundDiverges when t*nu >= 1.
double radix2_bound(std::size_t n, const ErrorModel& model, WeightSign sign);

/// The classical radix-2 FFT bound t*eta / (1 - t*eta) * sqrt(N), eta from mu_plus.
double fft_bound(std::size_t n, const ErrorModel& model);

/// Brute-force evaluation bound gamma_{N+2} * sqrt(N).
double direct_bound(std::size_t n, const ErrorModel& model);

struct ErrorSummary {
  double max_rel_error = 0.0;
  double mean_rel_error = 0.0;
};

/// Relative 2-norm error of the fast transform against the dense oracle over
/// `trials` inputs with entries uniform on the unit square [0,1)^2.
/// Trial i draws from its own generator seeded by (rng_seed, i).
ErrorSummary measure_forward_error(TransformKind kind, const VanSpec& spec, std::size_t trials,
                                   std::uint64_t rng_seed);

/// ||a - b||_2 / ||b||_2.
double relative_error(std::span<const cplx> a, std::span<const cplx> b);

/// Deterministic random vector with entries uniform on [0,1)^2.
cvec random_vector(std::size_t n, std::uint64_t seed, std::uint64_t stream = 0);

}  // namespace dvm
