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

#include "dvm/error.hpp"
#include "dvm/spec.hpp"
#include "unit/expect_error.hpp"

namespace dvm {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(MakeSpec, KeepsValidInput) {
  const VanSpec s = make_spec(4, 0.0, 1.0, Direction::Clockwise);
  EXPECT_EQ(s.n(), 4u);
  EXPECT_EQ(s.log2n(), 2u);
  EXPECT_EQ(s.theta(), 0.0);
  EXPECT_EQ(s.radius(), 1.0);
  EXPECT_EQ(s.direction(), Direction::Clockwise);
  EXPECT_FALSE(s.has_radius());
}

TEST(MakeSpec, ReducesAngle) {
  const VanSpec s = make_spec(4, 2 * kPi + 0.5, 1.0, Direction::Clockwise);
  EXPECT_NEAR(s.theta(), 0.5, 1e-15);
  EXPECT_NEAR(make_spec(4, -0.5, 1.0, Direction::Clockwise).theta(), 2 * kPi - 0.5, 1e-15);
}

TEST(MakeSpec, RejectsBadInput) {
  EXPECT_DVM_ERROR(make_spec(6, 0, 1, Direction::Clockwise), ErrorKind::NonPowerOfTwo);
  EXPECT_DVM_ERROR(make_spec(1, 0, 1, Direction::Clockwise), ErrorKind::NonPowerOfTwo);
  EXPECT_DVM_ERROR(make_spec(0, 0, 1, Direction::Clockwise), ErrorKind::NonPowerOfTwo);
  EXPECT_DVM_ERROR(make_spec(4, 0, 0.5, Direction::Clockwise), ErrorKind::RadiusOutOfRange);
  EXPECT_DVM_ERROR(make_spec(4, std::nan(""), 1, Direction::Clockwise), ErrorKind::InvalidArgument);
  EXPECT_DVM_ERROR(spec_from_delay(4, -1.0, 1.0), ErrorKind::InvalidArgument);
}

TEST(SpecFromDelay, Examples) {
  EXPECT_NEAR(spec_from_delay(8, 250.0, 1e-3).theta(), kPi / 2, 1e-12);
  EXPECT_EQ(spec_from_delay(8, 0.0, 1e-3).theta(), 0.0);
  EXPECT_NEAR(spec_from_delay(8, 1000.0, 1e-3).theta(), 0.0, 1e-12);
  EXPECT_EQ(spec_from_delay(8, 250.0, 1e-3).direction(), Direction::Clockwise);
}

void expect_nodes(const cvec& got, std::initializer_list<cplx> want) {
  ASSERT_EQ(got.size(), want.size());
  std::size_t i = 0;
  for (const cplx& w : want) {
    EXPECT_NEAR(got[i].real(), w.real(), 1e-15) << i;
    EXPECT_NEAR(got[i].imag(), w.imag(), 1e-15) << i;
    ++i;
  }
}

TEST(Nodes, RootsOfUnity) {
  const cplx j{0, 1};
  expect_nodes(nodes(make_spec(4, 0, 1, Direction::Counterclockwise)), {1.0, j, -1.0, -j});
  expect_nodes(nodes(make_spec(4, 0, 1, Direction::Clockwise)), {1.0, -j, -1.0, j});
  expect_nodes(nodes(make_spec(2, kPi / 2, 1, Direction::Counterclockwise)), {j, -j});
}

TEST(Nodes, RadiusScalesModulus) {
  for (const cplx& v : nodes(make_spec(16, 0.3, 1.7, Direction::Clockwise))) {
    EXPECT_NEAR(std::abs(v), 1.7, 1e-15);
  }
}

}  // namespace
}  // namespace dvm
