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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dvm/factors.hpp"
#include "dvm/spec.hpp"

namespace dvm {

/// The four radix-2 algorithms. VanC/VanCR run on clockwise nodes,
/// VanCC/VanCCR on counterclockwise nodes; the R variants allow r >= 1.
enum class TransformKind { VanC, VanCC, VanCR, VanCCR };

inline constexpr TransformKind kAllKinds[] = {TransformKind::VanC, TransformKind::VanCC,
                                              TransformKind::VanCR, TransformKind::VanCCR};

std::string_view to_string(TransformKind kind) noexcept;
std::optional<TransformKind> parse_kind(std::string_view name) noexcept;

Direction direction_of(TransformKind kind) noexcept;
bool allows_radius(TransformKind kind) noexcept;

/// Throws SpecMismatch when the spec's direction or radius is not valid for `kind`.
void check_compatible(TransformKind kind, const VanSpec& spec);

/// A spec-bound fast transform. The factor stages are computed once; apply()
/// sweeps them level by level and finishes with one bit-reversal gather in
/// place of the per-level even-odd interleaves.
class FastTransform {
 public:
  FastTransform(TransformKind kind, const VanSpec& spec);

  const VanSpec& spec() const noexcept { return spec_; }
  TransformKind kind() const noexcept { return kind_; }
  std::span<const Factor> factors() const noexcept { return factors_; }

  cvec apply(std::span<const cplx> z) const;

 private:
  TransformKind kind_;
  VanSpec spec_;
  std::vector<Factor> factors_;
  std::vector<std::size_t> gather_;
};

/// Counterclockwise nodes on the unit circle.
cvec vancc(std::span<const cplx> z, const VanSpec& spec);
/// Clockwise nodes on the unit circle.
cvec vanc(std::span<const cplx> z, const VanSpec& spec);
/// Counterclockwise nodes on C(0, r): vancc of diag(r^l) z.
cvec vanccr(std::span<const cplx> z, const VanSpec& spec);
/// Clockwise nodes on C(0, r): vanc of diag(r^l) z.
cvec vancr(std::span<const cplx> z, const VanSpec& spec);

cvec transform(TransformKind kind, std::span<const cplx> z, const VanSpec& spec);

/// Dense O(N^2) reference: explicit_matrix(spec) * z with left-to-right row sums.
cvec direct_matvec(std::span<const cplx> z, const VanSpec& spec,
                   std::size_t cap = kDefaultExplicitCap);

/// Row-wise left-to-right product with a prebuilt matrix.
cvec matvec(const DenseMatrix& m, std::span<const cplx> z);

/// Index map i -> reverse of the low log2(n) bits of i.
std::vector<std::size_t> bit_reversal(std::size_t n);

}  // namespace dvm
