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
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "relsim/relation_vector.hpp"
#include "relsim/taxonomy.hpp"
#include "relsim/tie_break.hpp"

namespace relsim {

struct LabeledNounModifier {
  std::string modifier;
  std::string head;
  std::string label;  // one of the 30 abbreviations

  /// Modifier is X, head is Y.
  WordPair pair() const { return {modifier, head}; }
};

/// TSV: modifier <TAB> head <TAB> abbreviation [<TAB> ignored...]. '#' lines
/// and blank lines are skipped. Unknown abbreviations are reported with
/// their line number.
std::vector<LabeledNounModifier> read_labeled_pairs(std::istream& in);
std::vector<LabeledNounModifier> load_labeled_pairs(
    const std::filesystem::path& path);

struct LabeledVector {
  std::string label;
  std::vector<double> values;
};

/// Label of the training vector with the largest cosine to the probe.
std::string classify_1nn(std::span<const LabeledVector> train,
                         std::span<const double> probe, TieBreaker& ties);

/// Two-neighbour variant. Returns no label (abstain), one, or two (nearest
/// first):
///   both neighbours share a class   that class, whatever t is
///   -m <= t <= m                    the nearest neighbour's class
///   t > m                           abstain
///   t < -m                          both classes
/// where m is the cosine margin between the two neighbours. With a single
/// training vector its class is returned.
std::vector<std::string> classify_margin(std::span<const LabeledVector> train,
                                         std::span<const double> probe,
                                         double threshold, TieBreaker& ties);

/// Guess-set marker used in confusion counts when the classifier abstains.
inline constexpr std::string_view kAbstainLabel = "-";

struct ClassMetrics {
  std::string label;
  std::size_t size = 0;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  double precision = 0;
  double recall = 0;
  double f = 0;
};

struct LoocvResult {
  /// One row per label of the granularity (zero-support rows included),
  /// sorted alphabetically.
  std::vector<ClassMetrics> per_class;
  /// (true label, guessed label) -> count; abstentions use kAbstainLabel.
  std::map<std::pair<std::string, std::string>, std::size_t> confusion;
  std::size_t items = 0;
  std::size_t correct = 0;  // guess set contains the true label
  std::size_t guesses = 0;
  std::size_t abstained = 0;
  std::size_t doubles = 0;
};

struct LoocvOptions {
  double threshold = 0;
  Granularity granularity = Granularity::kThirtyClass;
  TieBreakMode tie_break = TieBreakMode::kRandom;
  std::uint64_t seed = 0;
  /// Called once per fold with the probe index and the training indices.
  std::function<void(std::size_t, std::span<const std::size_t>)> on_fold;
};

/// Leave-one-out cross-validation of classify_margin. Labels must be
/// relation-class abbreviations; at five classes they are collapsed to their
/// group before classification. Fold i breaks ties with
/// ordinal_seed(seed, i). Accounting per fold, with G the guess set and c the
/// true class: c in G adds TP to c; every other member of G adds FP; c not in
/// G (including abstention) adds FN to c.
LoocvResult loocv(std::span<const LabeledVector> dataset,
                  const LoocvOptions& options);

struct MacroAverage {
  double precision = 0;
  double recall = 0;
  double f = 0;
};

/// Unweighted means over classes. The F is the mean of per-class F values,
/// not the harmonic mean of the averaged precision and recall.
MacroAverage macroaverage(std::span<const ClassMetrics> per_class);

}  // namespace relsim
