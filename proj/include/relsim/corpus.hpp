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

#include <filesystem>
#include <string_view>
#include <vector>

#include "relsim/positional_index.hpp"

namespace relsim {

/// Line that separates documents inside a single corpus file.
inline constexpr std::string_view kDocumentSeparator = "%%";

/// Splits a single-file corpus on separator lines. A trailing empty section
/// (file ending in "%%") is dropped. Ids are assigned 0, 1, 2, ...
std::vector<Document> split_documents(std::string_view text);

/// Reads a corpus from a directory (one document per regular file, ids in
/// lexicographic filename order) or from a single "%%"-separated file.
/// Throws InputError when the path cannot be read.
std::vector<Document> load_corpus(const std::filesystem::path& path);

}  // namespace relsim
