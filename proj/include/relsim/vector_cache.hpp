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
#include <map>
#include <string>
#include <vector>

#include "relsim/errors.hpp"
#include "relsim/relation_vector.hpp"

namespace relsim {

/// Where cached counts came from. A cache is only usable with the same
/// corpus fingerprint, joining-term checksum and hit mode.
struct CacheProvenance {
  std::string corpus;  // hex fingerprint of the index file
  std::string terms;   // hex checksum of the joining-term table
  std::string mode;    // "document" | "occurrence"

  bool operator==(const CacheProvenance&) const = default;
};

class ProvenanceMismatch : public InputError {
 public:
  ProvenanceMismatch(const std::string& field, const std::string& cached,
                     const std::string& active);
};

/// Raw hit counts per word pair, persisted as TSV:
///
///   # relsim vector cache v1
///   # corpus 89ab...
///   # terms 0123...
///   # mode document
///   x:y <TAB> c0 <TAB> ... <TAB> c127
///
/// Counts are decimal integers so the file is lossless and diffable.
class VectorCache {
 public:
  explicit VectorCache(CacheProvenance provenance)
      : provenance_(std::move(provenance)) {}

  const CacheProvenance& provenance() const noexcept { return provenance_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::map<std::string, std::vector<std::uint64_t>>& entries() const noexcept {
    return entries_;
  }

  bool contains(const WordPair& pair) const;
  /// Throws std::invalid_argument unless raw has kRelationVectorLength counts.
  void put(const WordPair& pair, std::vector<std::uint64_t> raw);
  /// Throws InputError when the pair is not cached.
  RelationVector vector(const WordPair& pair) const;

  /// Throws ProvenanceMismatch naming the first field that differs. Empty
  /// fields in `active` are not checked.
  void require_provenance(const CacheProvenance& active) const;

  void write(std::ostream& out) const;
  static VectorCache read(std::istream& in);
  void save(const std::filesystem::path& path) const;
  static VectorCache load(const std::filesystem::path& path);

 private:
  CacheProvenance provenance_;
  std::map<std::string, std::vector<std::uint64_t>> entries_;
};

}  // namespace relsim
