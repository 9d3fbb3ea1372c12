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
#include <vector>

#include "relsim/relation_vector.hpp"
#include "relsim/sweep.hpp"
#include "relsim/tie_break.hpp"

namespace relsim {

struct AnalogyQuestion {
  WordPair stem;
  std::vector<WordPair> choices;  // five for SAT items; >= 2 accepted
  std::size_t answer = 0;
};

/// TSV, one question per line:
///   stemA:stemB <TAB> a1:b1 ... <TAB> ak:bk <TAB> answer-letter
/// '#' lines and blank lines are skipped. Errors carry the line number.
std::vector<AnalogyQuestion> read_questions(std::istream& in);
std::vector<AnalogyQuestion> load_questions(const std::filesystem::path& path);

struct GuessOutcome {
  /// Empty (skip), one guess, or best and second-best in that order.
  std::vector<std::size_t> guesses;
  double margin = 0;
  bool skipped_zero_stem = false;
};

/// Cosine of the stem vector with each choice vector, in choice order.
std::vector<double> score_choices(const RelationVector& stem,
                                  std::span<const RelationVector> choices);

/// Margin policy with margin m = best - second best (m >= 0):
///   -m <= t <= m   guess the best choice
///   t > m          skip
///   t < -m         guess best and second best
/// A zero stem vector is skipped regardless of t.
GuessOutcome decide(std::span<const double> cosines, double threshold,
                    bool stem_is_zero, TieBreaker& ties);

struct EvalReport {
  std::size_t total = 0;
  std::size_t correct = 0;
  std::size_t incorrect = 0;
  std::size_t skipped = 0;
  std::size_t zero_stem = 0;  // subset of skipped
  std::size_t doubles = 0;
  std::size_t guesses_made = 0;
  double precision = 0;
  double recall = 0;
  double f = 0;
};

/// A question is correct when its answer is among the guesses; every guessed
/// index counts once towards guesses_made.
EvalReport evaluate(std::span<const AnalogyQuestion> questions,
                    std::span<const GuessOutcome> outcomes);
EvalReport evaluate(std::span<const std::size_t> answers,
                    std::span<const GuessOutcome> outcomes);

/// One point per correct answer, minus a quarter point per incorrect one.
double raw_sat_score(std::size_t correct, std::size_t incorrect) noexcept;

/// Cosines of one question, computed once and reused across thresholds.
struct ScoredQuestion {
  std::vector<double> cosines;
  bool stem_is_zero = false;
  std::size_t answer = 0;
};

ScoredQuestion score_question(const RelationVector& stem,
                              std::span<const RelationVector> choices,
                              std::size_t answer);

/// Question i breaks ties with seed ordinal_seed(seed, i).
std::vector<GuessOutcome> decide_all(std::span<const ScoredQuestion> questions,
                                     double threshold, TieBreakMode mode,
                                     std::uint64_t seed);

SweepRow to_sweep_row(double threshold, const EvalReport& report);

std::vector<SweepRow> sweep_analogies(std::span<const ScoredQuestion> questions,
                                      std::span<const double> thresholds,
                                      TieBreakMode mode, std::uint64_t seed);

struct PoolRanking {
  std::vector<std::size_t> order;  // pool indices, best first
  std::vector<double> cosines;     // indexed by pool index

  /// 1-based rank of a pool index.
  std::size_t rank_of(std::size_t pool_index) const;
};

/// Pool sorted by descending cosine with the stem; equal cosines keep
/// ascending pool order.
PoolRanking rank_pool(const RelationVector& stem,
                      std::span<const RelationVector> pool);

struct CumulativeRow {
  std::size_t rank = 0;
  std::size_t matches = 0;
  double match_fraction = 0;
  std::size_t cumulative = 0;
  double cumulative_fraction = 0;
};

/// Rows for k = 1..max_k, given the 1-based rank of each question's correct
/// pair. Fractions are relative to the number of questions.
std::vector<CumulativeRow> cumulative_top_k(std::span<const std::size_t> ranks,
                                            std::size_t max_k = 10);

}  // namespace relsim
