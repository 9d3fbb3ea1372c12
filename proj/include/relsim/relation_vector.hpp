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
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "relsim/joining_terms.hpp"
#include "relsim/positional_index.hpp"

namespace relsim {

/// Two queries (x-first, y-first) per joining term.
inline constexpr std::size_t kRelationVectorLength = 2 * JoiningTermTable::kSize;

struct WordPair {
  std::string x;
  std::string y;

  /// "x:y", the key used in caches and input files.
  std::string key() const { return x + ":" + y; }
  WordPair reversed() const { return {y, x}; }

  /// Parses "x:y"; multiword members use underscores. Throws InputError.
  static WordPair parse(std::string_view text);

  auto operator<=>(const WordPair&) const = default;
};

/// Answers phrase queries with hit counts. Implementations must be safe to
/// call concurrently, or be used from one thread only.
class HitCountProvider {
 public:
  virtual ~HitCountProvider() = default;
  virtual std::uint64_t count(std::string_view phrase) const = 0;
};

/// Reference provider backed by a local positional index.
class IndexHitProvider : public HitCountProvider {
 public:
  IndexHitProvider(const PositionalIndex& index, HitMode mode)
      : index_(&index), mode_(mode) {}

  std::uint64_t count(std::string_view phrase) const override;

 private:
  const PositionalIndex* index_;
  HitMode mode_;
};

/// A provider failure, tagged with the query that failed.
class ProviderError : public std::runtime_error {
 public:
  ProviderError(std::string query, const std::string& cause)
      : std::runtime_error("query '" + query + "': " + cause),
        query_(std::move(query)) {}
  const std::string& query() const noexcept { return query_; }

 private:
  std::string query_;
};

struct RelationVector {
  WordPair pair;
  std::vector<std::uint64_t> raw;
  std::vector<double> values;

  /// values[i] = ln(raw[i] + 1).
  static RelationVector from_raw(WordPair pair, std::vector<std::uint64_t> raw);

  bool is_zero() const noexcept;
};

/// log_base(x + 1) of every count. Natural log by default.
std::vector<double> log_transform(std::span<const std::uint64_t> raw,
                                  double base = std::numbers::e);

/// Queries in vector order: for term j, element 2j is "x term y" and element
/// 2j+1 is "y term x", with both members stemmed. Units are joined by single
/// spaces, so the empty term gives "x y" and "s * " gives "x s * y".
std::vector<std::string> generate_queries(
    const WordPair& pair,
    const JoiningTermTable& table = JoiningTermTable::standard());

/// Throws ProviderError if any query fails.
RelationVector build_vector(
    const HitCountProvider& provider, const WordPair& pair,
    const JoiningTermTable& table = JoiningTermTable::standard());

/// Cosine of the angle between two vectors; 0 if either has zero norm.
/// Throws std::invalid_argument on a length mismatch.
double cosine(std::span<const double> a, std::span<const double> b);
double cosine(const RelationVector& a, const RelationVector& b);

}  // namespace relsim
