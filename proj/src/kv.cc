// Copyright 2026 The onbase Authors.
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

#include "kv.h"

#include <charconv>
#include <cstdlib>

#include "onbase/error.h"

namespace onbase::internal {

NamedArgs ParseNamedArgs(std::string_view text) {
  NamedArgs out;
  const size_t colon = text.find(':');
  out.name = std::string(text.substr(0, colon));
  if (colon == std::string_view::npos) return out;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const size_t comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw Error(ErrorCode::kConfig,
                  "expected key=value in '" + std::string(text) + "'");
    }
    out.args[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return out;
}

double ParseDouble(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (value.empty() || end != value.c_str() + value.size()) {
    throw Error(ErrorCode::kConfig, "'" + key + "' expects a number, got '" + value + "'");
  }
  return v;
}

size_t ParseSize(const std::string& key, const std::string& value) {
  size_t v = 0;
  const auto res = std::from_chars(value.data(), value.data() + value.size(), v);
  if (res.ec != std::errc() || res.ptr != value.data() + value.size()) {
    throw Error(ErrorCode::kConfig,
                "'" + key + "' expects a nonnegative integer, got '" + value + "'");
  }
  return v;
}

std::string FormatDouble(double v) {
  // Shortest round-trip representation; fixed notation for everyday
  // magnitudes so CSV files stay readable.
  char buf[64];
  const double mag = v < 0 ? -v : v;
  const auto fmt = (v == 0.0 || (mag >= 1e-5 && mag < 1e15))
                       ? std::chars_format::fixed
                       : std::chars_format::general;
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, fmt);
  return std::string(buf, res.ptr);
}

}  // namespace onbase::internal
