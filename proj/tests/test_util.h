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

#ifndef DIXIT_TESTS_TEST_UTIL_H_
#define DIXIT_TESTS_TEST_UTIL_H_

#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include <map>
#include <utility>

#include "dixit/agents/agent.h"
#include "dixit/agents/association.h"
#include "dixit/agents/lexicon.h"
#include "dixit/common/rng.h"
#include "dixit/engine/card.h"
#include "dixit/engine/game.h"

namespace dixit::testing {

inline const char* const kVocabulary[] = {
    "moon", "sea", "door", "child", "clock", "tree",
    "fire", "bird", "dream", "mask", "key", "stair",
};
inline constexpr int kVocabularySize = 12;

inline std::string CardName(int i) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "k%03d", i);
  return buf;
}

// Cards k000.. with two or three tags and a 4-dimensional feature vector.
inline std::vector<Card> SyntheticDeck(int size, std::uint64_t seed = 1) {
  Rng rng(seed);
  std::vector<Card> deck;
  for (int i = 0; i < size; ++i) {
    Card card;
    card.id = CardName(i);
    const int tags = 2 + static_cast<int>(rng.UniformIndex(2));
    while (static_cast<int>(card.tags.size()) < tags) {
      card.tags.insert(kVocabulary[rng.UniformIndex(kVocabularySize)]);
    }
    std::vector<double> features(4);
    for (double& f : features) f = rng.UniformUnit() - 0.5;
    card.features = features;
    deck.push_back(std::move(card));
  }
  return deck;
}

// Every vocabulary word alone plus each adjacent pair.
inline std::shared_ptr<const agents::CandidateLexicon> SyntheticLexicon(
    int phrase_limit = 4) {
  std::vector<agents::LexiconEntry> entries;
  for (int i = 0; i < kVocabularySize; ++i) {
    entries.push_back({ParsePhrase(kVocabulary[i]), std::nullopt});
    if (i + 1 < kVocabularySize) {
      entries.push_back({ParsePhrase(std::string(kVocabulary[i]) + " " +
                                     kVocabulary[i + 1]),
                         std::nullopt});
    }
  }
  return std::make_shared<const agents::CandidateLexicon>(std::move(entries),
                                                          phrase_limit);
}

// Scores looked up from a table keyed by (card id, phrase text).
class TableModel : public agents::AssociationModel {
 public:
  explicit TableModel(double fallback = 0.0) : fallback_(fallback) {}
  void Set(const CardId& card, const std::string& phrase, double score) {
    scores_[{card, phrase}] = score;
  }
  double Score(const Card& card, const Phrase& phrase) const override {
    auto it = scores_.find({card.id, phrase.Text()});
    return it == scores_.end() ? fallback_ : it->second;
  }
  std::string_view name() const override { return "table"; }

 private:
  double fallback_;
  std::map<std::pair<CardId, std::string>, double> scores_;
};

inline Card PlainCard(const std::string& id) {
  Card card;
  card.id = id;
  return card;
}

inline agents::AgentSpec FastSpec(agents::StoryPolicy policy, int samples,
                                  std::uint64_t seed = 5) {
  agents::AgentSpec spec;
  spec.name = std::string(agents::StoryPolicyName(policy));
  spec.story_policy = policy;
  spec.settings.samples = samples;
  spec.settings.candidate_limit = 4;
  spec.seed = seed;
  return spec;
}

// Plays one round with uniformly random legal moves, ending in RoundScored.
inline void PlayRandomRound(GameState& state, Rng& rng) {
  const int n = state.num_players();
  const int teller = state.storyteller;
  const auto& hand = state.hands[teller];
  StorytellerSubmit(state, hand[rng.UniformIndex(hand.size())].id,
                    ParsePhrase(kVocabulary[rng.UniformIndex(kVocabularySize)]));
  for (int k = 1; k < n; ++k) {
    const int p = (teller + k) % n;
    const auto& h = state.hands[p];
    DecoySubmit(state, p, h[rng.UniformIndex(h.size())].id);
  }
  for (int k = 1; k < n; ++k) {
    const int p = (teller + k) % n;
    std::vector<CardId> options;
    for (const TableEntry& entry : state.round.table) {
      if (entry.owner != p) options.push_back(entry.card);
    }
    VoteSubmit(state, p, options[rng.UniformIndex(options.size())]);
  }
}

// Compact rendering of everything in a GameState, for equality checks.
inline std::string Fingerprint(const GameState& state) {
  std::string out = std::string(PhaseName(state.phase)) + "|r" +
                    std::to_string(state.round_index) + "|st" +
                    std::to_string(state.storyteller) + "|deck";
  for (const Card& c : state.deck) out += " " + c.id;
  for (const auto& hand : state.hands) {
    out += "|hand";
    for (const Card& c : hand) out += " " + c.id;
  }
  out += "|scores";
  for (int s : state.scores) out += " " + std::to_string(s);
  out += "|discard";
  for (const Card& c : state.discard) out += " " + c.id;
  out += "|phrase " + (state.round.phrase ? state.round.phrase->Text() : "-");
  out += "|subs";
  for (const auto& s : state.round.submissions) out += " " + s.value_or("-");
  out += "|table";
  for (const TableEntry& t : state.round.table) {
    out += " " + t.card + "@" + std::to_string(t.owner);
  }
  out += "|votes";
  for (const auto& v : state.round.votes) out += " " + v.value_or("-");
  out += "|winners";
  for (int w : state.winners) out += " " + std::to_string(w);
  return out;
}

inline std::filesystem::path DataPath(const std::string& name) {
  return std::filesystem::path(DIXIT_DATA_DIR) / name;
}

inline std::filesystem::path ScratchDir(const std::string& name) {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / ("dixit_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace dixit::testing

#endif  // DIXIT_TESTS_TEST_UTIL_H_
