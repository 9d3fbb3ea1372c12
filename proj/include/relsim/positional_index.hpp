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

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "relsim/errors.hpp"
#include "relsim/phrase_query.hpp"

namespace relsim {

using DocId = std::uint32_t;

struct Document {
  DocId id = 0;
  std::vector<std::string> tokens;
};

struct Posting {
  DocId doc = 0;
  std::uint32_t position = 0;

  auto operator<=>(const Posting&) const = default;
};

/// DocumentHits counts matching documents (search-engine "hits");
/// Occurrences counts every matching start position.
enum class HitMode { kDocumentHits, kOccurrences };

std::string_view to_string(HitMode mode) noexcept;
/// Accepts "document" and "occurrence"; throws InputError otherwise.
HitMode parse_hit_mode(std::string_view name);

struct HitCount {
  std::uint64_t count = 0;
  HitMode mode = HitMode::kDocumentHits;
};

class DuplicateDocumentError : public InputError {
 public:
  explicit DuplicateDocumentError(DocId id);
  DocId doc_id() const noexcept { return id_; }

 private:
  DocId id_;
};

/// Immutable positional inverted index. Terms are kept sorted so that
/// substring wildcards can be expanded by a prefix range scan.
class PositionalIndex {
 public:
  struct DocInfo {
    DocId id = 0;
    std::uint32_t length = 0;
    bool operator==(const DocInfo&) const = default;
  };

  std::size_t doc_count() const noexcept { return docs_.size(); }
  std::uint64_t token_count() const noexcept;
  std::size_t vocabulary_size() const noexcept { return terms_.size(); }

  std::span<const std::string> terms() const noexcept { return terms_; }
  std::span<const DocInfo> docs() const noexcept { return docs_; }
  /// Sorted postings of a term; empty when the term is unknown.
  std::span<const Posting> postings(std::string_view term) const;

  /// Sorted union of the postings of every term the pattern matches.
  /// AnyWord is not expandable and yields an empty list.
  std::vector<Posting> expand(const TokenPattern& pattern) const;

  void save(std::ostream& out) const;
  static PositionalIndex load(std::istream& in);

  bool operator==(const PositionalIndex&) const = default;

 private:
  friend PositionalIndex build_index(std::span<const Document> docs);

  std::vector<std::string> terms_;
  std::vector<std::vector<Posting>> postings_;
  std::vector<DocInfo> docs_;
};

/// Throws DuplicateDocumentError on a repeated doc id and InputError on a
/// token outside [a-z0-9]+.
PositionalIndex build_index(std::span<const Document> docs);

/// Counts consecutive-token matches of the query. Matches never cross
/// document boundaries; overlapping matches each count in Occurrences mode.
HitCount count_hits(const PositionalIndex& index, const PhraseQuery& query,
                    HitMode mode = HitMode::kDocumentHits);

}  // namespace relsim
