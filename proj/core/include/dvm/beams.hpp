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
#include <vector>

#include "dvm/spec.hpp"

namespace dvm {

/// Response of beam k of a true-time-delay filterbank over a grid of
/// spatial frequencies.
struct BeamResponse {
  std::size_t k = 0;
  std::vector<double> omega_x;
  cvec response;
  std::vector<double> magnitude_db;
};

/// M points evenly covering [-pi, pi], both ends included. Requires M >= 2.
std::vector<double> spatial_grid(std::size_t m);

/// H_k(omega_x) = sum_i v_k^i exp(-j*omega_x*i) for every beam k, where v_k
/// are the clockwise nodes of spec_from_delay(n, freq, tau). Each grid point
/// costs one fast clockwise transform of the steering vector.
std::vector<BeamResponse> beam_responses(std::size_t n, double freq_hz, double tau_seconds,
                                         std::size_t grid_points);

/// Same responses by explicit double summation; the test oracle.
std::vector<BeamResponse> beam_responses_direct(std::size_t n, double freq_hz, double tau_seconds,
                                                std::size_t grid_points);

}  // namespace dvm
