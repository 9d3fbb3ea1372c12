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
#include <optional>
#include <random>
#include <span>
#include <string_view>

namespace relsim {

enum class TieBreakMode { kRandom, kFirst };

/// Accepts "random" and "first"; throws InputError otherwise.
TieBreakMode parse_tie_break(std::string_view name);

/// Seed for one question or fold. Depends only on the ordinal, so parallel
/// or reordered execution leaves tie-breaks unchanged.
constexpr std::uint64_t ordinal_seed(std::uint64_t global_seed,
                                     std::uint64_t ordinal) noexcept {
  return global_seed ^ ordinal;
}

/// Picks among exactly-tied candidates. The generator is only consulted when
/// there is an actual tie, so the seed matters only in that case.
class TieBreaker {
 public:
  TieBreaker(TieBreakMode mode, std::uint64_t seed) : mode_(mode), rng_(seed) {}

  /// Index in [0, n).
  std::size_t pick(std::size_t n);

 private:
  TieBreakMode mode_;
  std::mt19937_64 rng_;
};

struct TopTwo {
  std::size_t best = 0;
  double best_score = 0;
  std::optional<std::size_t> second;
  double second_score = 0;

  /// best_score - second_score, or 0 with a single candidate.
  double margin() const noexcept {
    return second ? best_score - second_score : 0.0;
  }
};

/// Highest and second-highest scores. Exact ties at either rank go through
/// the tie breaker. Requires a non-empty score list.
TopTwo select_top_two(std::span<const double> scores, TieBreaker& ties);

}  // namespace relsim
