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

#include <sstream>

#include "dvm/beams.hpp"
#include "dvm/csv.hpp"
#include "unit/expect_error.hpp"

namespace dvm {
namespace {

TEST(Beams, CoherentSumAtBroadside) {
  const auto beams = beam_responses(8, 0.0, 1e-3, 17);
  ASSERT_EQ(beams.size(), 8u);
  EXPECT_EQ(beams[0].omega_x[8], 0.0);
  EXPECT_NEAR(std::abs(beams[0].response[8]), 8.0, 1e-12);
}

TEST(Beams, PeakMagnitudeIsN) {
  // theta = 0: beam k peaks where exp(-j w) = conj(v_k), i.e. w = -2 pi k / 8,
  // which is grid index 8 - 2k on 17 points over [-pi, pi].
  const auto beams = beam_responses(8, 0.0, 1.0, 17);
  for (std::size_t k = 0; k <= 4; ++k) {
    EXPECT_NEAR(std::abs(beams[k].response[8 - 2 * k]), 8.0, 1e-9) << k;
    EXPECT_NEAR(beams[k].magnitude_db[8 - 2 * k], 20 * std::log10(8.0), 1e-9);
  }
}

TEST(Beams, MatchesDoubleSum) {
  const double tau = 1e-3;
  const double f = 0.13 / tau;
  const auto fast = beam_responses(8, f, tau, 101);
  const auto direct = beam_responses_direct(8, f, tau, 101);
  for (std::size_t k = 0; k < 8; ++k) {
    for (std::size_t g = 0; g < 101; ++g) {
      EXPECT_NEAR(std::abs(fast[k].response[g] - direct[k].response[g]), 0.0, 1e-12);
    }
  }
}

TEST(Beams, InvalidGrid) {
  EXPECT_DVM_ERROR(beam_responses(8, 1.0, 1.0, 1), ErrorKind::InvalidArgument);
  EXPECT_DVM_ERROR(beam_responses(6, 1.0, 1.0, 8), ErrorKind::NonPowerOfTwo);
}

TEST(Csv, ReadsWithAndWithoutHeader) {
  std::istringstream plain("1,2\n-0.5, 3e-2\n\n");
  EXPECT_EQ(read_complex_csv(plain), (cvec{{1, 2}, {-0.5, 0.03}}));
  std::istringstream header("re,im\r\n+1,0\r\n");
  EXPECT_EQ(read_complex_csv(header), (cvec{{1, 0}}));
}

TEST(Csv, RoundTripIsExact) {
  const cvec v = {{0.1, -1.0 / 3.0}, {1e-300, 6.02e23}, {-0.0, 2.5}};
  std::stringstream ss;
  write_complex_csv(ss, v);
  EXPECT_EQ(read_complex_csv(ss), v);
}

TEST(Csv, Malformed) {
  std::istringstream bad("1,2\n3\n");
  EXPECT_DVM_ERROR(read_complex_csv(bad), ErrorKind::MalformedInput);
  std::istringstream empty("");
  EXPECT_DVM_ERROR(read_complex_csv(empty), ErrorKind::MalformedInput);
  std::istringstream junk("1,x\n");
  EXPECT_DVM_ERROR(read_complex_csv(junk), ErrorKind::MalformedInput);
}

}  // namespace
}  // namespace dvm
