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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "relsim/errors.hpp"

namespace relsim {

/// Longest run of characters an embedded asterisk may stand for.
inline constexpr std::size_t kMaxWildcardGap = 5;
/// Alphabetic characters required before an embedded asterisk.
inline constexpr std::size_t kMinWildcardPrefixLetters = 3;

enum class PatternKind { kLiteral, kAnyWord, kSubstringWildcard };

/// One position of a quoted phrase query.
///
///   Literal            "very"    matches exactly "very"
///   AnyWord            "*"       matches any single token
///   SubstringWildcard  "colo*r"  matches prefix + (0..5 chars) + suffix
class TokenPattern {
 public:
  static TokenPattern literal(std::string token);
  static TokenPattern any_word();
  /// Throws QueryError when the prefix carries fewer than three letters.
  static TokenPattern substring(std::string prefix, std::string suffix);

  PatternKind kind() const noexcept { return kind_; }
  /// Literal text, or the part before the asterisk for a substring wildcard.
  const std::string& prefix() const noexcept { return prefix_; }
  const std::string& suffix() const noexcept { return suffix_; }

  bool matches(std::string_view token) const noexcept;
  std::string to_string() const;

  bool operator==(const TokenPattern&) const = default;

 private:
  TokenPattern(PatternKind kind, std::string prefix, std::string suffix)
      : kind_(kind), prefix_(std::move(prefix)), suffix_(std::move(suffix)) {}

  PatternKind kind_;
  std::string prefix_;
  std::string suffix_;
};

struct PhraseQuery {
  std::vector<TokenPattern> patterns;

  std::string to_string() const;
  bool operator==(const PhraseQuery&) const = default;
};

enum class QueryErrorCode {
  kEmpty,
  kLeadingWildcard,
  kTrailingWildcard,
  kShortWildcardPrefix,
  kMultipleWildcards,
  kInvalidWildcardUnit,
};

class QueryError : public InputError {
 public:
  QueryError(QueryErrorCode code, const std::string& what)
      : InputError(what), code_(code) {}
  QueryErrorCode code() const noexcept { return code_; }

 private:
  QueryErrorCode code_;
};

bool match_token(const TokenPattern& pattern, std::string_view token) noexcept;

/// Parses a quoted-phrase query. Units are separated by whitespace; a lone
/// "*" is a whole-word wildcard, a unit with one embedded "*" is a substring
/// wildcard, anything else is tokenized into literals (so "dog's" becomes the
/// two literals "dog" "s").
PhraseQuery parse_phrase(std::string_view query);

}  // namespace relsim
