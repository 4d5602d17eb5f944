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

#ifndef DIXIT_AGENTS_LEXICON_H_
#define DIXIT_AGENTS_LEXICON_H_

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dixit/engine/card.h"

namespace dixit::agents {

struct LexiconEntry {
  Phrase phrase;
  std::optional<std::vector<double>> vector;  // for feature_cosine
};

// The finite pool of phrases an agent may utter.
class CandidateLexicon {
 public:
  // Throws kEmptyLexicon, kPhraseTooLong (an entry longer than
  // `phrase_limit`), kInvalidArgument (duplicate phrase).
  CandidateLexicon(std::vector<LexiconEntry> entries, int phrase_limit);

  std::span<const LexiconEntry> entries() const { return entries_; }
  const std::vector<Phrase>& phrases() const { return phrases_; }
  std::size_t size() const { return entries_.size(); }
  int phrase_limit() const { return phrase_limit_; }

  // nullptr when the phrase is unknown or carries no vector.
  const std::vector<double>* VectorFor(const Phrase& phrase) const;

  // Lexicographically least phrase; the deterministic fallback utterance.
  const Phrase& LeastPhrase() const { return least_; }

 private:
  std::vector<LexiconEntry> entries_;
  std::vector<Phrase> phrases_;
  std::map<Phrase, std::size_t> index_;
  Phrase least_;
  int phrase_limit_;
};

// Lexicon file: JSON lines {"tokens": [str...], "vector": [num...]?}.
CandidateLexicon ReadLexicon(std::istream& in, const std::string& source,
                             int phrase_limit);
CandidateLexicon LoadLexicon(const std::filesystem::path& path,
                             int phrase_limit);

}  // namespace dixit::agents

#endif  // DIXIT_AGENTS_LEXICON_H_
