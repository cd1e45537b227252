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

#include <complex>
#include <cstddef>
#include <vector>

namespace dvm {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

enum class Direction { Counterclockwise, Clockwise };

/// +1 for counterclockwise node order, -1 for clockwise.
constexpr int sign_of(Direction d) noexcept { return d == Direction::Counterclockwise ? 1 : -1; }

bool is_power_of_two(std::size_t n) noexcept;

/// log2 of a power of two.
unsigned log2_exact(std::size_t n) noexcept;

/// A validated description of one Vandermonde matrix on N equally spaced
/// nodes of the circle C(0, r). Node k is r*exp(±j(theta + 2*pi*k/N)).
class VanSpec {
 public:
  std::size_t n() const noexcept { return n_; }
  unsigned log2n() const noexcept { return log2_exact(n_); }
  double theta() const noexcept { return theta_; }
  double radius() const noexcept { return radius_; }
  Direction direction() const noexcept { return direction_; }
  bool has_radius() const noexcept { return radius_ != 1.0; }

  friend bool operator==(const VanSpec&, const VanSpec&) = default;

 private:
  friend VanSpec make_spec(std::size_t, double, double, Direction);
  VanSpec(std::size_t n, double theta, double radius, Direction d)
      : n_(n), theta_(theta), radius_(radius), direction_(d) {}

  std::size_t n_;
  double theta_;
  double radius_;
  Direction direction_;
};

/// Validates the arguments and reduces theta into [0, 2*pi).
/// Throws NonPowerOfTwo, RadiusOutOfRange or InvalidArgument.
VanSpec make_spec(std::size_t n, double theta, double radius, Direction direction);

/// Builds the clockwise spec of a true-time-delay Vandermonde matrix:
/// theta = 2*pi*f*tau reduced modulo 2*pi.
VanSpec spec_from_delay(std::size_t n, double freq_hz, double tau_seconds, double radius = 1.0);

/// Reduces an angle into [0, 2*pi).
double normalize_angle(double theta);

/// The N nodes, each from a single complex exponential.
cvec nodes(const VanSpec& spec);

}  // namespace dvm
