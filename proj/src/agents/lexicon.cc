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

#include "dixit/agents/lexicon.h"

#include "dixit/common/error.h"
#include "dixit/common/json_lines.h"

namespace dixit::agents {

namespace {

LexiconEntry EntryFromJson(const nlohmann::json& record) {
  LexiconEntry entry;
  entry.phrase = Phrase(record.at("tokens").get<std::vector<std::string>>());
  if (record.contains("vector") && !record["vector"].is_null()) {
    entry.vector = record["vector"].get<std::vector<double>>();
  }
  return entry;
}

}  // namespace

CandidateLexicon::CandidateLexicon(std::vector<LexiconEntry> entries,
                                   int phrase_limit)
    : entries_(std::move(entries)), phrase_limit_(phrase_limit) {
  if (entries_.empty()) Fail(ErrorCode::kEmptyLexicon, "lexicon is empty");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const Phrase& phrase = entries_[i].phrase;
    if (phrase.empty()) Fail(ErrorCode::kInvalidPhrase, "empty lexicon phrase");
    if (static_cast<int>(phrase.size()) > phrase_limit_) {
      Fail(ErrorCode::kPhraseTooLong, "lexicon phrase '" + phrase.Text() +
                                          "' exceeds " +
                                          std::to_string(phrase_limit_) +
                                          " tokens");
    }
    if (!index_.emplace(phrase, i).second) {
      Fail(ErrorCode::kInvalidArgument,
           "duplicate lexicon phrase '" + phrase.Text() + "'");
    }
    phrases_.push_back(phrase);
  }
  least_ = index_.begin()->first;
}

const std::vector<double>* CandidateLexicon::VectorFor(
    const Phrase& phrase) const {
  auto it = index_.find(phrase);
  if (it == index_.end() || !entries_[it->second].vector) return nullptr;
  return &*entries_[it->second].vector;
}

CandidateLexicon ReadLexicon(std::istream& in, const std::string& source,
                             int phrase_limit) {
  std::vector<LexiconEntry> entries;
  ForEachJsonLine(in, source, [&](const nlohmann::json& record, int) {
    entries.push_back(EntryFromJson(record));
  });
  return CandidateLexicon(std::move(entries), phrase_limit);
}

CandidateLexicon LoadLexicon(const std::filesystem::path& path,
                             int phrase_limit) {
  std::vector<LexiconEntry> entries;
  ForEachJsonLineInFile(path, [&](const nlohmann::json& record, int) {
    entries.push_back(EntryFromJson(record));
  });
  return CandidateLexicon(std::move(entries), phrase_limit);
}

}  // namespace dixit::agents
