// Copyright 2026 The relsim Authors.
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

#include "relsim/phrase_query.hpp"

#include <algorithm>
#include <cctype>

#include "relsim/tokenizer.hpp"

namespace relsim {
namespace {

std::string lowercase(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

bool all_token_chars(std::string_view s) {
  return std::all_of(s.begin(), s.end(), is_token_char);
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> units;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) units.push_back(s.substr(start, i - start));
  }
  return units;
}

}  // namespace

TokenPattern TokenPattern::literal(std::string token) {
  return TokenPattern(PatternKind::kLiteral, std::move(token), {});
}

TokenPattern TokenPattern::any_word() {
  return TokenPattern(PatternKind::kAnyWord, {}, {});
}

TokenPattern TokenPattern::substring(std::string prefix, std::string suffix) {
  auto letters = std::count_if(prefix.begin(), prefix.end(), [](char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0;
  });
  if (static_cast<std::size_t>(letters) < kMinWildcardPrefixLetters) {
    throw QueryError(QueryErrorCode::kShortWildcardPrefix,
                     "wildcard needs at least three letters before it: '" +
                         prefix + "*" + suffix + "'");
  }
  return TokenPattern(PatternKind::kSubstringWildcard, std::move(prefix),
                      std::move(suffix));
}

bool TokenPattern::matches(std::string_view token) const noexcept {
  switch (kind_) {
    case PatternKind::kLiteral:
      return token == prefix_;
    case PatternKind::kAnyWord:
      return true;
    case PatternKind::kSubstringWildcard: {
      if (token.size() < prefix_.size() + suffix_.size()) return false;
      if (token.size() - prefix_.size() - suffix_.size() > kMaxWildcardGap) {
        return false;
      }
      return token.starts_with(prefix_) && token.ends_with(suffix_);
    }
  }
  return false;
}

std::string TokenPattern::to_string() const {
  switch (kind_) {
    case PatternKind::kLiteral:
      return prefix_;
    case PatternKind::kAnyWord:
      return "*";
    case PatternKind::kSubstringWildcard:
      return prefix_ + "*" + suffix_;
  }
  return {};
}

std::string PhraseQuery::to_string() const {
  std::string out;
  for (const auto& p : patterns) {
    if (!out.empty()) out.push_back(' ');
    out += p.to_string();
  }
  return out;
}

bool match_token(const TokenPattern& pattern, std::string_view token) noexcept {
  return pattern.matches(token);
}

PhraseQuery parse_phrase(std::string_view query) {
  PhraseQuery q;
  for (std::string_view raw : split_whitespace(query)) {
    std::string unit = lowercase(raw);
    if (unit == "*") {
      q.patterns.push_back(TokenPattern::any_word());
      continue;
    }
    auto star = unit.find('*');
    if (star == std::string::npos) {
      for (auto& token : tokenize(unit)) {
        q.patterns.push_back(TokenPattern::literal(std::move(token)));
      }
      continue;
    }
    if (unit.find('*', star + 1) != std::string::npos) {
      throw QueryError(QueryErrorCode::kMultipleWildcards,
                       "more than one asterisk in '" + unit + "'");
    }
    std::string prefix = unit.substr(0, star);
    std::string suffix = unit.substr(star + 1);
    if (!all_token_chars(prefix) || !all_token_chars(suffix)) {
      throw QueryError(QueryErrorCode::kInvalidWildcardUnit,
                       "wildcard unit contains separator characters: '" +
                           unit + "'");
    }
    q.patterns.push_back(
        TokenPattern::substring(std::move(prefix), std::move(suffix)));
  }

  if (q.patterns.empty()) {
    throw QueryError(QueryErrorCode::kEmpty,
                     "empty phrase query: '" + std::string(query) + "'");
  }
  if (q.patterns.front().kind() == PatternKind::kAnyWord) {
    throw QueryError(QueryErrorCode::kLeadingWildcard,
                     "phrase may not start with '*': '" + std::string(query) +
                         "'");
  }
  if (q.patterns.back().kind() == PatternKind::kAnyWord) {
    throw QueryError(QueryErrorCode::kTrailingWildcard,
                     "phrase may not end with '*': '" + std::string(query) +
                         "'");
  }
  return q;
}

}  // namespace relsim
