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
#include <optional>
#include <string>
#include <vector>

#include "relsim/positional_index.hpp"
#include "relsim/relation_vector.hpp"
#include "relsim/sweep.hpp"
#include "relsim/taxonomy.hpp"
#include "relsim/tie_break.hpp"

// Implementations of the relsim subcommands. Each throws InputError for bad
// input; reports go to `out`.
namespace relsim::cli {

namespace fs = std::filesystem;

struct IndexSummary {
  std::size_t docs = 0;
  std::uint64_t tokens = 0;
  std::size_t vocabulary = 0;
  std::string fingerprint;
};

IndexSummary index_build(const fs::path& corpus, const fs::path& output,
                         std::ostream& out, std::ostream& err);

struct LoadedIndex {
  PositionalIndex index;
  std::string fingerprint;  // hex FNV-1a of the file bytes
};

LoadedIndex load_index_file(const fs::path& path);

enum class PairFormat { kAuto, kSat, kNounmod, kPairs };

PairFormat parse_pair_format(const std::string& name);

/// Distinct pairs in first-seen order. kPairs files hold one "x:y" per line.
std::vector<WordPair> read_pair_file(const fs::path& path, PairFormat format);

struct VectorsOptions {
  fs::path pairs;
  PairFormat format = PairFormat::kAuto;
  fs::path index;
  fs::path cache;
  std::optional<fs::path> terms;
  HitMode mode = HitMode::kDocumentHits;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct VectorsSummary {
  std::size_t pairs = 0;
  std::size_t computed = 0;
  std::size_t reused = 0;
};

VectorsSummary vectors(const VectorsOptions& options, std::ostream& out);

struct SatOptions {
  fs::path questions;
  fs::path cache;
  std::optional<fs::path> terms;
  double threshold = 0;
  std::optional<ThresholdGrid> sweep;
  std::optional<fs::path> csv;
  std::uint64_t seed = 0;
  TieBreakMode tie_break = TieBreakMode::kRandom;
};

void sat_solve(const SatOptions& options, std::ostream& out);

struct SatRankOptions {
  fs::path questions;
  fs::path cache;
  std::optional<fs::path> terms;
  std::size_t top = 10;
};

void sat_rank(const SatRankOptions& options, std::ostream& out);

struct NounmodOptions {
  fs::path data;
  fs::path cache;
  std::optional<fs::path> terms;
  Granularity granularity = Granularity::kThirtyClass;
  double threshold = 0;
  std::optional<ThresholdGrid> sweep;
  std::optional<fs::path> csv;
  std::uint64_t seed = 0;
  TieBreakMode tie_break = TieBreakMode::kRandom;
};

void nounmod_eval(const NounmodOptions& options, std::ostream& out);

}  // namespace relsim::cli
