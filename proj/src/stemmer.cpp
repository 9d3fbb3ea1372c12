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

#include "relsim/stemmer.hpp"

#include <algorithm>
#include <cctype>

#include "relsim/errors.hpp"
#include "relsim/phrase_query.hpp"
#include "relsim/tokenizer.hpp"

namespace relsim {

std::string stem(std::string_view word) {
  const std::size_t n = word.size();
  std::string kept;
  if (n > 10) {
    kept = word.substr(0, n - 4);
  } else if (n > 8) {
    kept = word.substr(0, n - 3);
  } else if (n > 2) {
    kept = word;
  } else {
    return std::string(word);
  }
  auto letters = std::count_if(kept.begin(), kept.end(), [](char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0;
  });
  if (static_cast<std::size_t>(letters) < kMinWildcardPrefixLetters) {
    return std::string(word);
  }
  return kept + "*";
}

std::string stem_member(std::string_view member) {
  auto tokens = tokenize(member);
  if (tokens.empty()) {
    throw InputError("word pair member '" + std::string(member) +
                     "' has no letters or digits");
  }
  tokens.back() = stem(tokens.back());
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

}  // namespace relsim
