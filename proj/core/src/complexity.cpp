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

#include "dvm/complexity.hpp"

#include <string>

#include "dvm/error.hpp"

namespace dvm {

namespace {

void require_power_of_two(std::size_t n) {
  if (n < 2 || !is_power_of_two(n)) {
    throw Error(ErrorKind::NonPowerOfTwo, "n = " + std::to_string(n) + " is not 2^t with t >= 1");
  }
}

}  // namespace

GdbCount formula_count(TransformKind kind, std::size_t n, Arithmetic arithmetic) {
  require_power_of_two(n);
  const std::uint64_t N = n;
  const std::uint64_t t = log2_exact(n);
  const bool radius = allows_radius(kind);
  GdbCount c{N * t, 0, arithmetic};
  if (arithmetic == Arithmetic::Complex) {
    c.multiplications = radius ? N * t - N / 2 : N * t - N + 1;
  } else {
    // 2Nt - 5N/2 + 2 and 2Nt - 3N/2 + 1; both are non-negative for t >= 1.
    c.multiplications = radius ? 2 * N * t + 1 - (3 * N) / 2 : 2 * N * t + 2 - (5 * N) / 2;
  }
  return c;
}

GdbCount direct_count(std::size_t n, Arithmetic arithmetic) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "n must be at least 2");
  const std::uint64_t N = n;
  if (arithmetic == Arithmetic::Complex) return {N * (N - 1), N * (N - 1), arithmetic};
  return {N * (2 * N - 1), 2 * N * (N - 1), arithmetic};
}

GdbCount stage_count(const Factor& f, Arithmetic arithmetic) {
  const std::uint64_t m = f.size;
  const std::uint64_t blocks = f.blocks;
  const bool cx = arithmetic == Arithmetic::Complex;
  GdbCount c{0, 0, arithmetic};
  switch (f.kind) {
    case FactorKind::RadiusDiagonal:
      // r^0 = 1 is free. Against complex data the tally is N/2 - 1.
      c.multiplications = cx ? m / 2 - 1 : m - 1;
      break;
    case FactorKind::ScalarBlock:
      c.multiplications = blocks * (cx ? m / 2 : m);
      break;
    case FactorKind::Butterfly:
      c.additions = blocks * m;
      break;
    case FactorKind::DelayDiagonal:
      c.multiplications = blocks * (cx ? m / 2 - 1 : m - 2);
      break;
    case FactorKind::BaseBlock:
      c.additions = blocks * 2;
      c.multiplications = blocks;
      break;
    case FactorKind::EvenOddPermutationTranspose:
      break;
  }
  return c;
}

GdbCount measured_count(TransformKind kind, const VanSpec& spec, Arithmetic arithmetic) {
  check_compatible(kind, spec);
  // The R kernels pay for the radius diagonal even at r = 1, matching the
  // closed forms, which do not depend on r.
  std::vector<Factor> factors = build_factors(spec);
  if (allows_radius(kind) && !spec.has_radius()) {
    factors.insert(factors.begin(),
                   Factor{FactorKind::RadiusDiagonal, spec.n(), 1, 0, cvec(spec.n(), cplx{1.0, 0.0})});
  }
  GdbCount total{0, 0, arithmetic};
  for (const auto& f : factors) {
    const GdbCount c = stage_count(f, arithmetic);
    total.additions += c.additions;
    total.multiplications += c.multiplications;
  }
  return total;
}

}  // namespace dvm
