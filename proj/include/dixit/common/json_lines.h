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

#ifndef DIXIT_COMMON_JSON_LINES_H_
#define DIXIT_COMMON_JSON_LINES_H_

#include <filesystem>
#include <functional>
#include <istream>
#include <string>

#include "json.hpp"

namespace dixit {

// Calls `visit(record, line_number)` for every non-blank line of a JSON-lines
// stream. Malformed lines raise kParseError naming `source` and the 1-based
// line number; exceptions thrown by `visit` are rethrown with the same prefix.
void ForEachJsonLine(
    std::istream& in, const std::string& source,
    const std::function<void(const nlohmann::json&, int)>& visit);

void ForEachJsonLineInFile(
    const std::filesystem::path& path,
    const std::function<void(const nlohmann::json&, int)>& visit);

nlohmann::json ReadJsonFile(const std::filesystem::path& path);

}  // namespace dixit

#endif  // DIXIT_COMMON_JSON_LINES_H_
