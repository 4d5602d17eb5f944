// Copyright 2026 The Dixit Challenge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dixit/common/json_lines.h"

#include <fstream>

#include "dixit/common/error.h"

namespace dixit {

void ForEachJsonLine(
    std::istream& in, const std::string& source,
    const std::function<void(const nlohmann::json&, int)>& visit) {
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      Fail(ErrorCode::kParseError,
           source + ":" + std::to_string(line_number) + ": " + e.what());
    }
    try {
      visit(record, line_number);
    } catch (const DixitError& e) {
      throw DixitError(e.code(), source + ":" + std::to_string(line_number) +
                                     ": " + e.detail());
    } catch (const nlohmann::json::exception& e) {
      Fail(ErrorCode::kParseError,
           source + ":" + std::to_string(line_number) + ": " + e.what());
    }
  }
}

void ForEachJsonLineInFile(
    const std::filesystem::path& path,
    const std::function<void(const nlohmann::json&, int)>& visit) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIoError, "cannot open " + path.string());
  ForEachJsonLine(in, path.string(), visit);
}

nlohmann::json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIoError, "cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kParseError, path.string() + ": " + e.what());
  }
}

}  // namespace dixit
