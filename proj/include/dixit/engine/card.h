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

#ifndef DIXIT_ENGINE_CARD_H_
#define DIXIT_ENGINE_CARD_H_

#include <compare>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace dixit {

using CardId = std::string;

// One game card. The engine never interprets tags, features or the image
// reference; they exist for association models and clients.
struct Card {
  CardId id;
  std::set<std::string> tags;  // lowercase
  std::optional<std::vector<double>> features;
  std::optional<std::string> image_ref;

  bool operator==(const Card&) const = default;
};

// A text clue: whitespace-free, non-empty tokens. Length limits are a game
// setting and are checked by the engine, not here.
class Phrase {
 public:
  Phrase() = default;
  // Throws kInvalidPhrase on an empty token list or a malformed token.
  explicit Phrase(std::vector<std::string> tokens);

  const std::vector<std::string>& tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }
  // Tokens joined by single spaces.
  std::string Text() const;

  auto operator<=>(const Phrase&) const = default;

 private:
  std::vector<std::string> tokens_;
};

// Splits on whitespace. Throws kInvalidPhrase if no token remains.
Phrase ParsePhrase(std::string_view text);

std::string ToLower(std::string_view text);

// Checks deck-level invariants: unique ids and a common feature length.
void ValidateDeck(std::span<const Card> deck);

nlohmann::json CardToJson(const Card& card);
Card CardFromJson(const nlohmann::json& record);

// Deck file: one JSON object per line,
// {"id": str, "tags": [str...], "features": [num...]?, "image_ref": str?}.
std::vector<Card> ReadDeck(std::istream& in, const std::string& source);
std::vector<Card> LoadDeck(const std::filesystem::path& path);
void WriteDeck(std::ostream& out, std::span<const Card> deck);

}  // namespace dixit

#endif  // DIXIT_ENGINE_CARD_H_
