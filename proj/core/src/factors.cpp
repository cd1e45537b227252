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

#include "dvm/factors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dvm/error.hpp"
#include "phasor.hpp"

namespace dvm {

std::string_view to_string(FactorKind kind) noexcept {
  switch (kind) {
    case FactorKind::RadiusDiagonal: return "RadiusDiagonal";
    case FactorKind::ScalarBlock: return "ScalarBlock";
    case FactorKind::Butterfly: return "Butterfly";
    case FactorKind::DelayDiagonal: return "DelayDiagonal";
    case FactorKind::BaseBlock: return "BaseBlock";
    case FactorKind::EvenOddPermutationTranspose: return "EvenOddPermutationTranspose";
  }
  return "Unknown";
}

cplx scalar_weight(double theta, std::size_t size, Direction direction) {
  // theta * size / 2 is exact: size is a power of two.
  const long double angle = static_cast<long double>(theta) * static_cast<long double>(size / 2);
  return detail::phasor(sign_of(direction) * angle);
}

cplx delay_weight(std::size_t l, std::size_t size, Direction direction) {
  if (l == 0) return {1.0, 0.0};
  const long double angle = detail::kTwoPiL * static_cast<long double>(l) / static_cast<long double>(size);
  return detail::phasor(sign_of(direction) * angle);
}

std::vector<Factor> build_factors(const VanSpec& spec) {
  const std::size_t n = spec.n();
  const unsigned t = spec.log2n();
  const Direction dir = spec.direction();
  std::vector<Factor> stages;
  stages.reserve(3 * t + 2);

  if (spec.has_radius()) {
    cvec powers(n);
    for (std::size_t l = 0; l < n; ++l) {
      powers[l] = std::pow(spec.radius(), static_cast<double>(l));
    }
    stages.push_back({FactorKind::RadiusDiagonal, n, 1, 0, std::move(powers)});
  }

  for (unsigned s = 0; s + 1 < t; ++s) {
    const std::size_t m = n >> s;
    const std::size_t blocks = std::size_t{1} << s;
    stages.push_back({FactorKind::ScalarBlock, m, blocks, s, {scalar_weight(spec.theta(), m, dir)}});
    stages.push_back({FactorKind::Butterfly, m, blocks, s, {}});
    cvec delays(m / 2);
    for (std::size_t l = 0; l < m / 2; ++l) delays[l] = delay_weight(l, m, dir);
    stages.push_back({FactorKind::DelayDiagonal, m, blocks, s, std::move(delays)});
  }

  stages.push_back({FactorKind::BaseBlock, 2, n / 2, t - 1, {scalar_weight(spec.theta(), 2, dir)}});

  for (unsigned s = t - 1; s-- > 0;) {
    stages.push_back({FactorKind::EvenOddPermutationTranspose, n >> s, std::size_t{1} << s, s, {}});
  }
  return stages;
}

void apply_factor(const Factor& f, std::span<cplx> x) {
  const std::size_t m = f.size;
  const std::size_t h = m / 2;
  switch (f.kind) {
    case FactorKind::RadiusDiagonal:
      for (std::size_t l = 0; l < x.size(); ++l) x[l] *= f.payload[l].real();
      return;
    case FactorKind::ScalarBlock:
      for (std::size_t b = 0; b < f.blocks; ++b) {
        for (std::size_t i = 0; i < h; ++i) x[b * m + h + i] *= f.payload[0];
      }
      return;
    case FactorKind::Butterfly:
      for (std::size_t b = 0; b < f.blocks; ++b) {
        for (std::size_t i = 0; i < h; ++i) {
          const cplx a = x[b * m + i];
          const cplx c = x[b * m + h + i];
          x[b * m + i] = a + c;
          x[b * m + h + i] = a - c;
        }
      }
      return;
    case FactorKind::DelayDiagonal:
      for (std::size_t b = 0; b < f.blocks; ++b) {
        for (std::size_t i = 1; i < h; ++i) x[b * m + h + i] *= f.payload[i];
      }
      return;
    case FactorKind::BaseBlock:
      for (std::size_t b = 0; b < f.blocks; ++b) {
        const cplx a = x[2 * b];
        const cplx c = f.payload[0] * x[2 * b + 1];
        x[2 * b] = a + c;
        x[2 * b + 1] = a - c;
      }
      return;
    case FactorKind::EvenOddPermutationTranspose: {
      cvec tmp(m);
      for (std::size_t b = 0; b < f.blocks; ++b) {
        auto block = x.subspan(b * m, m);
        for (std::size_t i = 0; i < h; ++i) {
          tmp[2 * i] = block[i];
          tmp[2 * i + 1] = block[h + i];
        }
        std::copy(tmp.begin(), tmp.end(), block.begin());
      }
      return;
    }
  }
}

DenseMatrix explicit_matrix(const VanSpec& spec, std::size_t cap) {
  const std::size_t n = spec.n();
  if (n > cap) {
    throw Error(ErrorKind::SizeTooLarge,
                "explicit matrix of size " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  const long double sign = sign_of(spec.direction());
  const long double theta = spec.theta();
  const long double r = spec.radius();
  using cld = std::complex<long double>;

  // v_k^l = r^l * exp(±j*l*theta) * exp(±2*pi*j*((l*k) mod N)/N). l*theta is
  // exact in extended precision for N <= 2048, and the root-of-unity index
  // is reduced in integers, so each entry carries one final rounding.
  std::vector<cld> rotation(n);
  std::vector<cld> roots(n);
  for (std::size_t i = 0; i < n; ++i) {
    const long double rot = sign * static_cast<long double>(i) * theta;
    const long double root = sign * detail::kTwoPiL * static_cast<long double>(i) / static_cast<long double>(n);
    const long double scale = spec.has_radius() ? std::pow(r, static_cast<long double>(i)) : 1.0L;
    rotation[i] = scale * cld(std::cos(rot), std::sin(rot));
    if ((4 * i) % n == 0) {
      // Quarter turns are exact.
      constexpr long double re[] = {1.0L, 0.0L, -1.0L, 0.0L};
      constexpr long double im[] = {0.0L, 1.0L, 0.0L, -1.0L};
      const std::size_t q = 4 * i / n;
      roots[i] = cld(re[q], sign * im[q]);
    } else {
      roots[i] = cld(std::cos(root), std::sin(root));
    }
  }

  DenseMatrix v(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      const cld e = rotation[l] * roots[(l * k) % n];
      v(k, l) = {static_cast<double>(e.real()), static_cast<double>(e.imag())};
    }
  }
  return v;
}

DenseMatrix factor_product(std::span<const Factor> factors, std::size_t n) {
  DenseMatrix out(n, n);
  cvec col(n);
  for (std::size_t l = 0; l < n; ++l) {
    std::fill(col.begin(), col.end(), cplx{});
    col[l] = 1.0;
    for (const auto& f : factors) apply_factor(f, col);
    for (std::size_t k = 0; k < n; ++k) out(k, l) = col[k];
  }
  return out;
}

}  // namespace dvm
