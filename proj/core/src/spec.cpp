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

#include "dvm/spec.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "dvm/error.hpp"
#include "phasor.hpp"

namespace dvm {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonPowerOfTwo: return "NonPowerOfTwo";
    case ErrorKind::RadiusOutOfRange: return "RadiusOutOfRange";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SizeTooLarge: return "SizeTooLarge";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::DivergentGamma: return "DivergentGamma";
    case ErrorKind::BoundDiverges: return "BoundDiverges";
    case ErrorKind::NotRealizable: return "NotRealizable";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

bool is_power_of_two(std::size_t n) noexcept { return std::has_single_bit(n); }

unsigned log2_exact(std::size_t n) noexcept {
  return static_cast<unsigned>(std::countr_zero(n));
}

double normalize_angle(double theta) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double t = std::fmod(theta, two_pi);
  if (t < 0.0) t += two_pi;
  // fmod of a value just below a multiple can round up to exactly 2*pi.
  if (t >= two_pi) t = 0.0;
  return t;
}

VanSpec make_spec(std::size_t n, double theta, double radius, Direction direction) {
  if (n < 2 || !is_power_of_two(n)) {
    throw Error(ErrorKind::NonPowerOfTwo, "n = " + std::to_string(n) + " is not 2^t with t >= 1");
  }
  if (!std::isfinite(theta)) {
    throw Error(ErrorKind::InvalidArgument, "theta must be finite");
  }
  if (!(radius >= 1.0) || !std::isfinite(radius)) {
    throw Error(ErrorKind::RadiusOutOfRange, "radius must be a finite value >= 1");
  }
  return VanSpec(n, normalize_angle(theta), radius, direction);
}

VanSpec spec_from_delay(std::size_t n, double freq_hz, double tau_seconds, double radius) {
  if (!(freq_hz >= 0.0) || !(tau_seconds >= 0.0) || !std::isfinite(freq_hz) ||
      !std::isfinite(tau_seconds)) {
    throw Error(ErrorKind::InvalidArgument, "frequency and delay must be finite and >= 0");
  }
  // Reduce the number of turns f*tau before scaling so whole turns wrap exactly.
  const double turns = freq_hz * tau_seconds;
  const double frac = turns - std::floor(turns);
  return make_spec(n, 2.0 * std::numbers::pi * frac, radius, Direction::Clockwise);
}

cvec nodes(const VanSpec& spec) {
  const std::size_t n = spec.n();
  const long double sign = sign_of(spec.direction());
  cvec out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const long double angle =
        static_cast<long double>(spec.theta()) + detail::kTwoPiL * k / static_cast<long double>(n);
    out[k] = spec.radius() * detail::phasor(sign * angle);
  }
  return out;
}

}  // namespace dvm
