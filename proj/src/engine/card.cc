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

#include "dixit/engine/card.h"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

#include "dixit/common/error.h"
#include "dixit/common/json_lines.h"

namespace dixit {

namespace {

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)); }

}  // namespace

Phrase::Phrase(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty()) Fail(ErrorCode::kInvalidPhrase, "phrase has no tokens");
  for (const std::string& token : tokens_) {
    if (token.empty() || std::any_of(token.begin(), token.end(), IsSpace)) {
      Fail(ErrorCode::kInvalidPhrase, "malformed token '" + token + "'");
    }
  }
}

std::string Phrase::Text() const {
  std::string text;
  for (const std::string& token : tokens_) {
    if (!text.empty()) text += ' ';
    text += token;
  }
  return text;
}

Phrase ParsePhrase(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (IsSpace(c)) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return Phrase(std::move(tokens));
}

std::string ToLower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

void ValidateDeck(std::span<const Card> deck) {
  std::unordered_set<std::string_view> seen;
  std::optional<std::size_t> feature_length;
  for (const Card& card : deck) {
    if (card.id.empty()) Fail(ErrorCode::kInvalidDeck, "card with empty id");
    if (!seen.insert(card.id).second) {
      Fail(ErrorCode::kDuplicateCardId, "duplicate card id '" + card.id + "'");
    }
    if (card.features) {
      if (feature_length && *feature_length != card.features->size()) {
        Fail(ErrorCode::kInvalidDeck,
             "card '" + card.id + "' has " +
                 std::to_string(card.features->size()) +
                 " features, expected " + std::to_string(*feature_length));
      }
      feature_length = card.features->size();
    }
  }
}

nlohmann::json CardToJson(const Card& card) {
  nlohmann::json out;
  out["id"] = card.id;
  out["tags"] = card.tags;
  if (card.features) out["features"] = *card.features;
  if (card.image_ref) out["image_ref"] = *card.image_ref;
  return out;
}

Card CardFromJson(const nlohmann::json& record) {
  if (!record.is_object() || !record.contains("id") ||
      !record["id"].is_string()) {
    Fail(ErrorCode::kParseError, "card record needs a string \"id\"");
  }
  Card card;
  card.id = record["id"].get<std::string>();
  if (record.contains("tags")) {
    for (const auto& tag : record["tags"]) {
      card.tags.insert(ToLower(tag.get<std::string>()));
    }
  }
  if (record.contains("features") && !record["features"].is_null()) {
    card.features = record["features"].get<std::vector<double>>();
  }
  if (record.contains("image_ref") && !record["image_ref"].is_null()) {
    card.image_ref = record["image_ref"].get<std::string>();
  }
  return card;
}

std::vector<Card> ReadDeck(std::istream& in, const std::string& source) {
  std::vector<Card> deck;
  ForEachJsonLine(in, source, [&](const nlohmann::json& record, int) {
    deck.push_back(CardFromJson(record));
  });
  ValidateDeck(deck);
  return deck;
}

std::vector<Card> LoadDeck(const std::filesystem::path& path) {
  std::vector<Card> deck;
  ForEachJsonLineInFile(path, [&](const nlohmann::json& record, int) {
    deck.push_back(CardFromJson(record));
  });
  ValidateDeck(deck);
  return deck;
}

void WriteDeck(std::ostream& out, std::span<const Card> deck) {
  for (const Card& card : deck) out << CardToJson(card).dump() << '\n';
}

}  // namespace dixit
