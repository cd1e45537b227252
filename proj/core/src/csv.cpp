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

#include "dvm/csv.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

#include "dvm/error.hpp"

namespace dvm {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view text, double& out) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return false;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size();
}

bool parse_line(std::string_view line, cplx& out) {
  const auto comma = line.find(',');
  if (comma == std::string_view::npos) return false;
  double re = 0.0;
  double im = 0.0;
  if (!parse_double(line.substr(0, comma), re) || !parse_double(line.substr(comma + 1), im)) return false;
  out = {re, im};
  return true;
}

}  // namespace

cvec read_complex_csv(std::istream& in) {
  cvec values;
  std::string line;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty()) continue;
    cplx v;
    if (parse_line(text, v)) {
      values.push_back(v);
    } else if (!seen_content) {
      // header
    } else {
      throw Error(ErrorKind::MalformedInput, "line " + std::to_string(line_no) + ": expected \"re,im\"");
    }
    seen_content = true;
  }
  if (values.empty()) throw Error(ErrorKind::MalformedInput, "no complex values found");
  return values;
}

void write_complex_csv(std::ostream& out, std::span<const cplx> values) {
  char buf[80];
  for (const auto& v : values) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", v.real(), v.imag());
    out << buf;
  }
}

}  // namespace dvm
