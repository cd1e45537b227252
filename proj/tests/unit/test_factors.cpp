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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dvm/factors.hpp"
#include "dvm/transform.hpp"
#include "support/oracles.hpp"
#include "unit/expect_error.hpp"

namespace dvm {
namespace {

constexpr double kU = std::numeric_limits<double>::epsilon() / 2;

TEST(BuildFactors, TwoPointIsOneBaseStage) {
  const double theta = 0.37;
  const auto f = build_factors(make_spec(2, theta, 1.0, Direction::Counterclockwise));
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].kind, FactorKind::BaseBlock);
  EXPECT_EQ(f[0].blocks, 1u);
  EXPECT_NEAR(std::abs(f[0].payload[0] - std::polar(1.0, theta)), 0.0, 2 * kU);

  const DenseMatrix m = factor_product(f, 2);
  EXPECT_EQ(m(0, 0), cplx(1.0));
  EXPECT_EQ(m(1, 0), cplx(1.0));
  EXPECT_EQ(m(0, 1), f[0].payload[0]);
  EXPECT_EQ(m(1, 1), -f[0].payload[0]);
}

TEST(BuildFactors, StageOrder) {
  const auto f = build_factors(make_spec(16, 0.2, 1.5, Direction::Clockwise));
  std::vector<FactorKind> kinds;
  for (const auto& s : f) kinds.push_back(s.kind);
  using K = FactorKind;
  const std::vector<K> want = {K::RadiusDiagonal, K::ScalarBlock, K::Butterfly, K::DelayDiagonal,
                               K::ScalarBlock, K::Butterfly, K::DelayDiagonal,
                               K::ScalarBlock, K::Butterfly, K::DelayDiagonal,
                               K::BaseBlock, K::EvenOddPermutationTranspose,
                               K::EvenOddPermutationTranspose, K::EvenOddPermutationTranspose};
  EXPECT_EQ(kinds, want);
  EXPECT_EQ(f[1].size, 16u);
  EXPECT_EQ(f[4].size, 8u);
  EXPECT_EQ(f[4].blocks, 2u);
  EXPECT_EQ(f[9].payload.size(), 2u);
}

TEST(BuildFactors, FourPointDft) {
  const auto f = build_factors(make_spec(4, 0.0, 1.0, Direction::Clockwise));
  const DenseMatrix m = factor_product(f, 4);
  const DenseMatrix dft = testing::dft_matrix(4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      EXPECT_NEAR(std::abs(m(i, j) - dft(i, j)), 0.0, 4 * kU) << i << "," << j;
    }
  }
}

TEST(BuildFactors, RadiusStageFirst) {
  const auto f = build_factors(make_spec(4, 0.3, 2.0, Direction::Clockwise));
  ASSERT_EQ(f.front().kind, FactorKind::RadiusDiagonal);
  const cvec want = {1.0, 2.0, 4.0, 8.0};
  EXPECT_EQ(f.front().payload, want);
}

TEST(BuildFactors, NoRadiusStageAtUnitRadius) {
  for (const auto& s : build_factors(make_spec(8, 0.3, 1.0, Direction::Clockwise))) {
    EXPECT_NE(s.kind, FactorKind::RadiusDiagonal);
  }
}

TEST(BuildFactors, PermutationsComposeToBitReversal) {
  for (std::size_t n = 2; n <= 256; n *= 2) {
    cvec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<double>(i);
    for (const auto& s : build_factors(make_spec(n, 0.0, 1.0, Direction::Clockwise))) {
      if (s.kind == FactorKind::EvenOddPermutationTranspose) apply_factor(s, x);
    }
    const auto rev = bit_reversal(n);
    for (std::size_t k = 0; k < n; ++k) EXPECT_EQ(x[k].real(), static_cast<double>(rev[k])) << n;
  }
}

TEST(DelayWeight, ExactUnitAtZero) {
  EXPECT_EQ(delay_weight(0, 64, Direction::Clockwise), cplx(1.0, 0.0));
  const cplx w = delay_weight(1, 8, Direction::Clockwise);
  EXPECT_NEAR(w.real(), std::numbers::sqrt2 / 2, 1e-16);
  EXPECT_NEAR(w.imag(), -std::numbers::sqrt2 / 2, 1e-16);
}

TEST(ExplicitMatrix, Examples) {
  const DenseMatrix m2 = explicit_matrix(make_spec(2, 0.0, 1.0, Direction::Clockwise));
  EXPECT_EQ(m2(0, 0), cplx(1.0));
  EXPECT_EQ(m2(0, 1), cplx(1.0));
  EXPECT_EQ(m2(1, 0), cplx(1.0));
  EXPECT_EQ(m2(1, 1), cplx(-1.0));

  const DenseMatrix m = explicit_matrix(make_spec(32, 1.9, 1.3, Direction::Counterclockwise));
  for (std::size_t k = 0; k < 32; ++k) EXPECT_EQ(m(k, 0), cplx(1.0));

  const DenseMatrix m4 = explicit_matrix(make_spec(4, 0.0, 1.0, Direction::Clockwise));
  const DenseMatrix dft = testing::dft_matrix(4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(std::abs(m4(i, j) - dft(i, j)), 0.0, 4 * kU);
  }
}

TEST(ExplicitMatrix, RowsArePowersOfNodes) {
  const VanSpec spec = make_spec(16, 0.8, 1.1, Direction::Clockwise);
  const DenseMatrix m = explicit_matrix(spec);
  const cvec v = nodes(spec);
  for (std::size_t k = 0; k < 16; ++k) {
    for (std::size_t l = 0; l < 16; ++l) {
      const cplx want = std::pow(v[k], static_cast<double>(l));
      EXPECT_NEAR(std::abs(m(k, l) - want) / std::abs(want), 0.0, 1e-13);
    }
  }
}

TEST(ExplicitMatrix, SizeCap) {
  EXPECT_DVM_ERROR(explicit_matrix(make_spec(64, 0, 1, Direction::Clockwise), 32), ErrorKind::SizeTooLarge);
}

}  // namespace
}  // namespace dvm
