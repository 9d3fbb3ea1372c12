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

#include "relsim/tie_break.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "relsim/errors.hpp"

namespace relsim {

TieBreakMode parse_tie_break(std::string_view name) {
  if (name == "random") return TieBreakMode::kRandom;
  if (name == "first") return TieBreakMode::kFirst;
  throw InputError("unknown tie-break mode '" + std::string(name) +
                   "' (expected random|first)");
}

std::size_t TieBreaker::pick(std::size_t n) {
  if (n <= 1 || mode_ == TieBreakMode::kFirst) return 0;
  // Plain modulo keeps the sequence identical across standard libraries,
  // unlike std::uniform_int_distribution.
  return static_cast<std::size_t>(rng_() % n);
}

TopTwo select_top_two(std::span<const double> scores, TieBreaker& ties) {
  if (scores.empty()) throw std::invalid_argument("select_top_two: no scores");

  auto pick_max = [&](std::optional<std::size_t> excluded)
      -> std::optional<std::size_t> {
    std::vector<std::size_t> tied;
    for (std::size_t i = 0; i < scores.size(); ++i) {
      if (excluded && i == *excluded) continue;
      if (tied.empty() || scores[i] > scores[tied.front()]) {
        tied.assign(1, i);
      } else if (scores[i] == scores[tied.front()]) {
        tied.push_back(i);
      }
    }
    if (tied.empty()) return std::nullopt;
    return tied[ties.pick(tied.size())];
  };

  TopTwo top;
  top.best = *pick_max(std::nullopt);
  top.best_score = scores[top.best];
  top.second = pick_max(top.best);
  if (top.second) top.second_score = scores[*top.second];
  return top;
}

}  // namespace relsim
