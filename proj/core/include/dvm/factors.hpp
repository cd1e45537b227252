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
#include <span>
#include <string_view>
#include <vector>

#include "dvm/spec.hpp"

namespace dvm {

enum class FactorKind {
  RadiusDiagonal,               // diag(r^l), l = 0..N-1
  ScalarBlock,                  // diag(I, c*I) per block
  Butterfly,                    // [[I, I], [I, -I]] per block
  DelayDiagonal,                // diag(I, diag(exp(±2*pi*j*l/M))) per block
  BaseBlock,                    // [[1, w], [1, -w]] per 2x2 block
  EvenOddPermutationTranspose,  // P_M^T per block
};

std::string_view to_string(FactorKind kind) noexcept;

/// One sparse stage of the unrolled factorization. The stage is block
/// diagonal with `blocks` copies of a `size` x `size` pattern.
///
/// Payload by kind:
///   RadiusDiagonal  N entries r^l (imaginary parts zero)
///   ScalarBlock     one entry, c = exp(±j*theta*size/2)
///   DelayDiagonal   size/2 entries exp(±2*pi*j*l/size), entry 0 is exactly 1
///   BaseBlock       one entry, w = exp(±j*theta)
///   others          empty
struct Factor {
  FactorKind kind;
  std::size_t size;
  std::size_t blocks;
  unsigned level;  // recursion depth s; block size is N >> s
  cvec payload;
};

/// Factor stages in application order: the first element acts on the input
/// first. Multiplying them (last * ... * first) reproduces explicit_matrix.
std::vector<Factor> build_factors(const VanSpec& spec);

/// c = exp(sign*j*theta*size/2) for a block of the given size.
cplx scalar_weight(double theta, std::size_t size, Direction direction);

/// exp(sign*2*pi*j*l/size).
cplx delay_weight(std::size_t l, std::size_t size, Direction direction);

/// Applies one stage to a full-length vector in place.
void apply_factor(const Factor& factor, std::span<cplx> x);

/// Dense row-major complex matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const cplx> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  cvec data_;
};

inline constexpr std::size_t kDefaultExplicitCap = 8192;

/// [v_k^l] with each entry from one extended-precision exponential.
/// Throws SizeTooLarge when N exceeds `cap`.
DenseMatrix explicit_matrix(const VanSpec& spec, std::size_t cap = kDefaultExplicitCap);

/// Product of the stages as a dense matrix, built column by column.
DenseMatrix factor_product(std::span<const Factor> factors, std::size_t n);

}  // namespace dvm
