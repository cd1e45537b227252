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

#include <iosfwd>
#include <span>

#include "dvm/spec.hpp"

namespace dvm {

/// One "re,im" pair per line. Blank lines are skipped and a single
/// non-numeric first line is treated as a header. Throws MalformedInput.
cvec read_complex_csv(std::istream& in);

/// Writes "re,im" lines with round-trip precision.
void write_complex_csv(std::ostream& out, std::span<const cplx> values);

}  // namespace dvm
