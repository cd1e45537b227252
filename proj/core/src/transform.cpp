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

#include "dvm/transform.hpp"

#include <string>

#include "dvm/error.hpp"

namespace dvm {

std::string_view to_string(TransformKind kind) noexcept {
  switch (kind) {
    case TransformKind::VanC: return "vanc";
    case TransformKind::VanCC: return "vancc";
    case TransformKind::VanCR: return "vancr";
    case TransformKind::VanCCR: return "vanccr";
  }
  return "unknown";
}

std::optional<TransformKind> parse_kind(std::string_view name) noexcept {
  for (auto k : kAllKinds) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

Direction direction_of(TransformKind kind) noexcept {
  return (kind == TransformKind::VanC || kind == TransformKind::VanCR) ? Direction::Clockwise
                                                                       : Direction::Counterclockwise;
}

bool allows_radius(TransformKind kind) noexcept {
  return kind == TransformKind::VanCR || kind == TransformKind::VanCCR;
}

void check_compatible(TransformKind kind, const VanSpec& spec) {
  if (spec.direction() != direction_of(kind)) {
    throw Error(ErrorKind::SpecMismatch,
                std::string(to_string(kind)) + " requires " +
                    (direction_of(kind) == Direction::Clockwise ? "clockwise" : "counterclockwise") +
                    " nodes");
  }
  if (spec.has_radius() && !allows_radius(kind)) {
    throw Error(ErrorKind::SpecMismatch, std::string(to_string(kind)) + " requires radius 1");
  }
}

std::vector<std::size_t> bit_reversal(std::size_t n) {
  const unsigned bits = log2_exact(n);
  std::vector<std::size_t> rev(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = 0;
    for (unsigned b = 0; b < bits; ++b) r |= ((i >> b) & 1u) << (bits - 1 - b);
    rev[i] = r;
  }
  return rev;
}

FastTransform::FastTransform(TransformKind kind, const VanSpec& spec)
    : kind_(kind), spec_(spec), factors_(build_factors(spec)), gather_(bit_reversal(spec.n())) {
  check_compatible(kind, spec);
}

cvec FastTransform::apply(std::span<const cplx> z) const {
  const std::size_t n = spec_.n();
  if (z.size() != n) {
    throw Error(ErrorKind::LengthMismatch,
                "input has " + std::to_string(z.size()) + " entries, expected " + std::to_string(n));
  }
  cvec work(z.begin(), z.end());

  // Scalar, butterfly and delay stages of one level are fused into a single
  // pass; the floating-point operations are the same as applying them in turn.
  std::size_t i = 0;
  if (factors_[i].kind == FactorKind::RadiusDiagonal) {
    apply_factor(factors_[i], work);
    ++i;
  }
  for (; i < factors_.size() && factors_[i].kind == FactorKind::ScalarBlock; i += 3) {
    const Factor& scalar = factors_[i];
    const Factor& delay = factors_[i + 2];
    const std::size_t m = scalar.size;
    const std::size_t h = m / 2;
    const cplx c = scalar.payload[0];
    for (std::size_t base = 0; base < n; base += m) {
      {
        const cplx a = work[base];
        const cplx b = c * work[base + h];
        work[base] = a + b;
        work[base + h] = a - b;
      }
      for (std::size_t l = 1; l < h; ++l) {
        const cplx a = work[base + l];
        const cplx b = c * work[base + h + l];
        work[base + l] = a + b;
        work[base + h + l] = (a - b) * delay.payload[l];
      }
    }
  }
  apply_factor(factors_[i], work);  // BaseBlock

  cvec y(n);
  for (std::size_t k = 0; k < n; ++k) y[k] = work[gather_[k]];
  return y;
}

cvec vancc(std::span<const cplx> z, const VanSpec& spec) {
  return transform(TransformKind::VanCC, z, spec);
}

cvec vanc(std::span<const cplx> z, const VanSpec& spec) {
  return transform(TransformKind::VanC, z, spec);
}

cvec vanccr(std::span<const cplx> z, const VanSpec& spec) {
  return transform(TransformKind::VanCCR, z, spec);
}

cvec vancr(std::span<const cplx> z, const VanSpec& spec) {
  return transform(TransformKind::VanCR, z, spec);
}

cvec transform(TransformKind kind, std::span<const cplx> z, const VanSpec& spec) {
  return FastTransform(kind, spec).apply(z);
}

cvec matvec(const DenseMatrix& m, std::span<const cplx> z) {
  if (z.size() != m.cols()) {
    throw Error(ErrorKind::LengthMismatch, "matrix/vector size mismatch");
  }
  cvec y(m.rows());
  for (std::size_t k = 0; k < m.rows(); ++k) {
    const auto row = m.row(k);
    cplx acc{};
    for (std::size_t l = 0; l < row.size(); ++l) acc += row[l] * z[l];
    y[k] = acc;
  }
  return y;
}

cvec direct_matvec(std::span<const cplx> z, const VanSpec& spec, std::size_t cap) {
  if (z.size() != spec.n()) {
    throw Error(ErrorKind::LengthMismatch,
                "input has " + std::to_string(z.size()) + " entries, expected " + std::to_string(spec.n()));
  }
  return matvec(explicit_matrix(spec, cap), z);
}

}  // namespace dvm
