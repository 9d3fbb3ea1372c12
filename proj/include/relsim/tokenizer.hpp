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
#include <vector>

namespace relsim {

/// True for the characters that may appear inside a token (ASCII letters and
/// digits).
bool is_token_char(char c) noexcept;

/// Splits text into lowercase tokens. A token is a maximal run of ASCII
/// letters/digits; everything else separates, so "dog's" yields "dog", "s"
/// and "six-hour" yields "six", "hour".
std::vector<std::string> tokenize(std::string_view text);

}  // namespace relsim
