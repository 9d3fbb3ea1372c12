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

#include <string>
#include <string_view>

namespace relsim {

/// Truncation stemmer producing a substring-wildcard pattern:
///
///   length > 10       drop last 4 chars, append '*'   advertisement -> advertise*
///   8 < length <= 10  drop last 3 chars, append '*'   compliance    -> complia*
///   2 < length <= 8   append '*'                      rhythm        -> rhythm*
///   length <= 2       unchanged                       up            -> up
///
/// If the part kept before the '*' has fewer than three letters (words made
/// mostly of digits), the word is returned unchanged because the wildcard
/// would not be a legal query unit.
std::string stem(std::string_view word);

/// Query fragment for one member of a word pair. Underscores and other
/// separators split a multiword member ("shoot_down"); every token but the
/// last is kept literally and the last one is stemmed. Throws InputError when
/// the member has no tokens.
std::string stem_member(std::string_view member);

}  // namespace relsim
