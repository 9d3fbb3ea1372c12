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
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace relsim {

/// The 64 connective fragments placed between the two (stemmed) words of a
/// pair. Terms are stored verbatim, surrounding spaces included, e.g. " ",
/// " * not ", "s * ".
class JoiningTermTable {
 public:
  static constexpr std::size_t kSize = 64;

  /// The default table.
  static const JoiningTermTable& standard();

  /// Throws InputError unless exactly kSize terms are given.
  static JoiningTermTable from_terms(std::vector<std::string> terms);

  /// One double-quoted term per line, e.g. `" * not "`. Blank lines and
  /// lines starting with '#' are skipped.
  static JoiningTermTable read(std::istream& in);
  static JoiningTermTable load(const std::filesystem::path& path);

  std::span<const std::string> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  /// FNV-1a over the newline-joined terms; recorded in vector caches.
  std::uint64_t checksum() const noexcept { return checksum_; }

 private:
  explicit JoiningTermTable(std::vector<std::string> terms);

  std::vector<std::string> terms_;
  std::uint64_t checksum_ = 0;
};

}  // namespace relsim
