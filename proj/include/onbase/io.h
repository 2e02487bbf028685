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

#ifndef ONBASE_IO_H_
#define ONBASE_IO_H_

#include <string>
#include <string_view>

#include "onbase/model.h"
#include "onbase/offline.h"

namespace onbase {

// One user per line, comma separated. Values are written in shortest
// round-trip form, so parsing the output gives back the same doubles.
std::string WeightMatrixToCsv(const WeightMatrix& w);
WeightMatrix WeightMatrixFromCsv(std::string_view text);

// {"n": .., "m": .., "w": [[..], ..]}
std::string WeightMatrixToJson(const WeightMatrix& w);
WeightMatrix WeightMatrixFromJson(std::string_view text);

// Edge list with 1-based user and basestation indices.
std::string MatchingToJson(const Matching& matching);
// 1-based basestation per user (0 when unassigned), plus degrees and value.
std::string AllocationToJson(const Allocation& alloc, const WeightMatrix& w);

std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, std::string_view contents);

}  // namespace onbase

#endif  // ONBASE_IO_H_
