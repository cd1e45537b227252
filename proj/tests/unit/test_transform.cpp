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

#include "dvm/error_bounds.hpp"
#include "dvm/transform.hpp"
#include "support/oracles.hpp"
#include "unit/expect_error.hpp"

namespace dvm {
namespace {

const cplx j{0.0, 1.0};

cvec unit_vector(std::size_t n, std::size_t i) {
  cvec e(n);
  e[i] = 1.0;
  return e;
}

TEST(TransformKindNames, RoundTrip) {
  for (auto k : kAllKinds) EXPECT_EQ(parse_kind(to_string(k)), k);
  EXPECT_FALSE(parse_kind("dft").has_value());
}

TEST(Transform, FirstColumnIsOnes) {
  const std::pair<TransformKind, VanSpec> cases[] = {
      {TransformKind::VanCC, make_spec(16, 0.4, 1.0, Direction::Counterclockwise)},
      {TransformKind::VanC, make_spec(16, 0.4, 1.0, Direction::Clockwise)},
      {TransformKind::VanCCR, make_spec(16, 0.4, 1.7, Direction::Counterclockwise)},
      {TransformKind::VanCR, make_spec(16, 0.4, 1.7, Direction::Clockwise)},
  };
  for (const auto& [kind, spec] : cases) {
    for (const cplx& y : transform(kind, unit_vector(16, 0), spec)) EXPECT_EQ(y, cplx(1.0)) << to_string(kind);
  }
}

TEST(Transform, TwoPoint) {
  const cplx a{0.25, -1.5};
  const cplx b{2.0, 0.75};
  const cvec y = vancc(cvec{a, b}, make_spec(2, 0.0, 1.0, Direction::Counterclockwise));
  EXPECT_EQ(y[0], a + b);
  EXPECT_EQ(y[1], a - b);
}

TEST(Transform, RadiusColumn) {
  const cvec y = vanccr(unit_vector(4, 1), make_spec(4, 0.0, 2.0, Direction::Counterclockwise));
  const cvec want = {2.0, 2.0 * j, -2.0, -2.0 * j};
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(std::abs(y[k] - want[k]), 0.0, 1e-15) << k;
}

TEST(Transform, VancMatchesDft) {
  const cvec z = random_vector(4, 3);
  const cvec y = vanc(z, make_spec(4, 0.0, 1.0, Direction::Clockwise));
  EXPECT_LT(relative_error(y, matvec(testing::dft_matrix(4), z)), 1e-15);
  const cvec yr = vancr(z, make_spec(4, 0.0, 1.0, Direction::Clockwise));
  EXPECT_EQ(y, yr);
}

TEST(Transform, OracleExamples) {
  struct Case {
    TransformKind kind;
    VanSpec spec;
    double tol;
  };
  const Case cases[] = {
      {TransformKind::VanCC, make_spec(8, 0.7, 1.0, Direction::Counterclockwise), 1e-13},
      {TransformKind::VanC, make_spec(16, 1.1, 1.0, Direction::Clockwise), 1e-13},
      {TransformKind::VanCCR, make_spec(8, 0.4, 1.5, Direction::Counterclockwise), 1e-12},
      {TransformKind::VanCR, make_spec(32, 2.0, 1.2, Direction::Clockwise), 1e-12},
  };
  for (const auto& c : cases) {
    const cvec z = random_vector(c.spec.n(), 11);
    EXPECT_LE(relative_error(transform(c.kind, z, c.spec), direct_matvec(z, c.spec)), c.tol) << to_string(c.kind);
  }
}

TEST(Transform, UnitRadiusKernelsAgree) {
  const cvec z = random_vector(64, 5);
  EXPECT_EQ(vanccr(z, make_spec(64, 0.9, 1.0, Direction::Counterclockwise)),
            vancc(z, make_spec(64, 0.9, 1.0, Direction::Counterclockwise)));
}

TEST(Transform, MatchesRecursiveReferenceBitForBit) {
  for (auto kind : kAllKinds) {
    for (std::size_t n = 2; n <= 512; n *= 2) {
      const VanSpec spec = make_spec(n, 0.61, allows_radius(kind) ? 1.3 : 1.0, direction_of(kind));
      const cvec z = random_vector(n, n);
      EXPECT_EQ(transform(kind, z, spec), testing::recursive_transform(kind, z, spec)) << to_string(kind) << " " << n;
    }
  }
}

TEST(Transform, DirectExamples) {
  const cvec y2 = direct_matvec(cvec{1.0, 0.0}, make_spec(2, 1.2, 1.0, Direction::Counterclockwise));
  EXPECT_EQ(y2, (cvec{1.0, 1.0}));
  const cvec y4 = direct_matvec(cvec{1.0, 1.0, 1.0, 1.0}, make_spec(4, 0.0, 1.0, Direction::Clockwise));
  EXPECT_EQ(y4, (cvec{4.0, 0.0, 0.0, 0.0}));
}

TEST(Transform, DispatchErrors) {
  const cvec z(8, cplx(1.0));
  const VanSpec ccw = make_spec(8, 0.2, 1.0, Direction::Counterclockwise);
  const VanSpec cw = make_spec(8, 0.2, 1.0, Direction::Clockwise);
  EXPECT_DVM_ERROR(transform(TransformKind::VanC, z, ccw), ErrorKind::SpecMismatch);
  EXPECT_DVM_ERROR(transform(TransformKind::VanCC, z, cw), ErrorKind::SpecMismatch);
  EXPECT_DVM_ERROR(transform(TransformKind::VanC, z, make_spec(8, 0.2, 2.0, Direction::Clockwise)),
                   ErrorKind::SpecMismatch);
  EXPECT_DVM_ERROR(transform(TransformKind::VanC, cvec(4), cw), ErrorKind::LengthMismatch);
  EXPECT_DVM_ERROR(direct_matvec(cvec(4), cw), ErrorKind::LengthMismatch);

  const VanSpec r3 = make_spec(8, 0.2, 3.0, Direction::Counterclockwise);
  EXPECT_EQ(transform(TransformKind::VanCCR, z, r3), vanccr(z, r3));
  EXPECT_EQ(transform(TransformKind::VanC, z, cw), vanc(z, cw));
}

TEST(Transform, BitReversal) {
  EXPECT_EQ(bit_reversal(8), (std::vector<std::size_t>{0, 4, 2, 6, 1, 5, 3, 7}));
}

}  // namespace
}  // namespace dvm
