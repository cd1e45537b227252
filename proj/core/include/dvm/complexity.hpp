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
#include <span>

#include "dvm/factors.hpp"
#include "dvm/transform.hpp"

namespace dvm {

enum class Arithmetic { Complex, Real };

/// Gain-delay-block tally. Multiplications by +-1 and permutations are free.
struct GdbCount {
  std::uint64_t additions = 0;
  std::uint64_t multiplications = 0;
  Arithmetic arithmetic = Arithmetic::Complex;

  friend bool operator==(const GdbCount&, const GdbCount&) = default;
};

/// Closed forms, t = log2 n:
///   Complex  VanC/VanCC   (Nt, Nt - N + 1)      VanCR/VanCCR (Nt, Nt - N/2)
///   Real     VanC/VanCC   (Nt, 2Nt - 5N/2 + 2)  VanCR/VanCCR (Nt, 2Nt - 3N/2 + 1)
GdbCount formula_count(TransformKind kind, std::size_t n, Arithmetic arithmetic);

/// Dense evaluation with the all-ones first column left unmultiplied.
GdbCount direct_count(std::size_t n, Arithmetic arithmetic);

/// Per-stage tally of one factor under generic theta (no weight is +-1 other
/// than the unit l = 0 delay entry).
GdbCount stage_count(const Factor& factor, Arithmetic arithmetic);

/// Walks build_factors(spec) and sums stage_count. Throws SpecMismatch.
GdbCount measured_count(TransformKind kind, const VanSpec& spec, Arithmetic arithmetic);

}  // namespace dvm
