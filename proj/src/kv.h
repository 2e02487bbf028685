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

#ifndef ONBASE_SRC_KV_H_
#define ONBASE_SRC_KV_H_

#include <map>
#include <string>
#include <string_view>

namespace onbase::internal {

// Splits "name:k1=v1,k2=v2" into the name and its key/value pairs.
struct NamedArgs {
  std::string name;
  std::map<std::string, std::string> args;
};

NamedArgs ParseNamedArgs(std::string_view text);
double ParseDouble(const std::string& key, const std::string& value);
size_t ParseSize(const std::string& key, const std::string& value);
std::string FormatDouble(double v);

}  // namespace onbase::internal

#endif  // ONBASE_SRC_KV_H_
