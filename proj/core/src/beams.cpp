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

#include "dvm/beams.hpp"

#include <cmath>
#include <numbers>

#include "dvm/error.hpp"
#include "dvm/transform.hpp"

namespace dvm {

namespace {

cvec steering(std::size_t n, double omega_x) {
  cvec s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = std::polar(1.0, -omega_x * static_cast<double>(i));
  return s;
}

std::vector<BeamResponse> empty_beams(std::size_t n, const std::vector<double>& grid) {
  std::vector<BeamResponse> beams(n);
  for (std::size_t k = 0; k < n; ++k) {
    beams[k].k = k;
    beams[k].omega_x = grid;
    beams[k].response.resize(grid.size());
    beams[k].magnitude_db.resize(grid.size());
  }
  return beams;
}

void fill_db(std::vector<BeamResponse>& beams) {
  for (auto& b : beams) {
    for (std::size_t g = 0; g < b.response.size(); ++g) {
      b.magnitude_db[g] = 20.0 * std::log10(std::abs(b.response[g]));
    }
  }
}

}  // namespace

std::vector<double> spatial_grid(std::size_t m) {
  if (m < 2) throw Error(ErrorKind::InvalidArgument, "grid needs at least 2 points");
  std::vector<double> grid(m);
  for (std::size_t i = 0; i < m; ++i) {
    grid[i] = -std::numbers::pi + 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(m - 1);
  }
  return grid;
}

std::vector<BeamResponse> beam_responses(std::size_t n, double freq_hz, double tau_seconds,
                                         std::size_t grid_points) {
  const std::vector<double> grid = spatial_grid(grid_points);
  const FastTransform fast(TransformKind::VanC, spec_from_delay(n, freq_hz, tau_seconds));
  auto beams = empty_beams(n, grid);
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const cvec h = fast.apply(steering(n, grid[g]));
    for (std::size_t k = 0; k < n; ++k) beams[k].response[g] = h[k];
  }
  fill_db(beams);
  return beams;
}

std::vector<BeamResponse> beam_responses_direct(std::size_t n, double freq_hz, double tau_seconds,
                                                std::size_t grid_points) {
  const std::vector<double> grid = spatial_grid(grid_points);
  const VanSpec spec = spec_from_delay(n, freq_hz, tau_seconds);
  auto beams = empty_beams(n, grid);
  for (std::size_t k = 0; k < n; ++k) {
    const double node_angle = -(spec.theta() + 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
    for (std::size_t g = 0; g < grid.size(); ++g) {
      cplx acc{};
      for (std::size_t i = 0; i < n; ++i) {
        acc += std::polar(1.0, (node_angle - grid[g]) * static_cast<double>(i));
      }
      beams[k].response[g] = acc;
    }
  }
  fill_db(beams);
  return beams;
}

}  // namespace dvm
