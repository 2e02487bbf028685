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

#include "onbase/io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "kv.h"
#include "onbase/error.h"

namespace onbase {

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::string WeightMatrixToCsv(const WeightMatrix& w) {
  std::string out;
  for (size_t i = 0; i < w.num_users(); ++i) {
    for (size_t j = 0; j < w.num_bs(); ++j) {
      if (j) out += ',';
      out += internal::FormatDouble(w(i, static_cast<int>(j)));
    }
    out += '\n';
  }
  return out;
}

WeightMatrix WeightMatrixFromCsv(std::string_view text) {
  std::vector<double> values;
  size_t rows = 0;
  size_t cols = 0;
  size_t line_no = 0;
  while (!text.empty()) {
    const size_t nl = text.find('\n');
    const std::string_view line = Trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    size_t count = 0;
    std::string_view rest = line;
    while (true) {
      const size_t comma = rest.find(',');
      const std::string cell(Trim(rest.substr(0, comma)));
      try {
        values.push_back(internal::ParseDouble("cell", cell));
      } catch (const Error&) {
        throw Error(ErrorCode::kIo, "CSV line " + std::to_string(line_no) +
                                        ": not a number: '" + cell + "'");
      }
      ++count;
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (rows == 0) cols = count;
    if (count != cols) {
      throw Error(ErrorCode::kIo, "CSV line " + std::to_string(line_no) + " has " +
                                      std::to_string(count) + " values, expected " +
                                      std::to_string(cols));
    }
    ++rows;
  }
  if (rows == 0) throw Error(ErrorCode::kIo, "CSV holds no rows");
  return WeightMatrix(rows, cols, std::move(values));
}

std::string WeightMatrixToJson(const WeightMatrix& w) {
  nlohmann::json rows = nlohmann::json::array();
  for (size_t i = 0; i < w.num_users(); ++i) {
    auto r = w.row(i);
    rows.push_back(std::vector<double>(r.begin(), r.end()));
  }
  nlohmann::json doc{{"n", w.num_users()}, {"m", w.num_bs()}, {"w", rows}};
  return doc.dump();
}

WeightMatrix WeightMatrixFromJson(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kIo, std::string("invalid JSON: ") + e.what());
  }
  try {
    const size_t n = doc.at("n").get<size_t>();
    const size_t m = doc.at("m").get<size_t>();
    const auto& rows = doc.at("w");
    if (rows.size() != n) throw Error(ErrorCode::kIo, "\"w\" must have n rows");
    std::vector<double> values;
    values.reserve(n * m);
    for (const auto& row : rows) {
      if (row.size() != m) throw Error(ErrorCode::kIo, "every row of \"w\" needs m entries");
      for (const auto& v : row) values.push_back(v.get<double>());
    }
    return WeightMatrix(n, m, std::move(values));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kIo, std::string("malformed weight matrix: ") + e.what());
  }
}

std::string MatchingToJson(const Matching& matching) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : matching.edges()) {
    edges.push_back({{"user", e.user + 1}, {"bs", e.bs + 1}, {"weight", e.weight}});
  }
  nlohmann::json doc{{"n", matching.num_users()},
                     {"m", matching.num_bs()},
                     {"weight", matching.weight()},
                     {"edges", edges}};
  return doc.dump();
}

std::string AllocationToJson(const Allocation& alloc, const WeightMatrix& w) {
  std::vector<int> assign;
  for (int bs : alloc.assignment()) assign.push_back(bs + 1);
  nlohmann::json doc{{"n", alloc.num_users()},
                     {"m", alloc.num_bs()},
                     {"assign", assign},
                     {"degrees", alloc.degrees()},
                     {"utility", TsUtility(alloc, w)}};
  return doc.dump();
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteTextFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error(ErrorCode::kIo, "write to '" + path + "' failed");
}

}  // namespace onbase
