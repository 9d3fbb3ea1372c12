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

#include "relsim/analogy.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

#include "relsim/errors.hpp"
#include "relsim/metrics.hpp"

namespace relsim {
namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, '\t')) fields.push_back(field);
  if (!line.empty() && line.back() == '\t') fields.emplace_back();
  return fields;
}

std::string trim(std::string s) {
  auto first = s.find_first_not_of(" \r");
  if (first == std::string::npos) return {};
  auto last = s.find_last_not_of(" \r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::vector<AnalogyQuestion> read_questions(std::istream& in) {
  std::vector<AnalogyQuestion> questions;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty() || line.front() == '#') continue;
    auto fields = split_tabs(line);
    auto where = "question file line " + std::to_string(lineno) + ": ";
    if (fields.size() < 4) {
      throw InputError(where + "expected stem, at least two choices and an "
                               "answer letter");
    }
    AnalogyQuestion q;
    try {
      q.stem = WordPair::parse(trim(fields.front()));
      for (std::size_t i = 1; i + 1 < fields.size(); ++i) {
        q.choices.push_back(WordPair::parse(trim(fields[i])));
      }
    } catch (const InputError& e) {
      throw InputError(where + e.what());
    }
    std::string letter = trim(fields.back());
    if (letter.size() != 1 || letter[0] < 'a' ||
        static_cast<std::size_t>(letter[0] - 'a') >= q.choices.size()) {
      throw InputError(where + "answer '" + letter + "' is not a choice letter");
    }
    q.answer = static_cast<std::size_t>(letter[0] - 'a');
    questions.push_back(std::move(q));
  }
  return questions;
}

std::vector<AnalogyQuestion> load_questions(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  return read_questions(in);
}

std::vector<double> score_choices(const RelationVector& stem,
                                  std::span<const RelationVector> choices) {
  std::vector<double> out;
  out.reserve(choices.size());
  for (const auto& c : choices) out.push_back(cosine(stem, c));
  return out;
}

GuessOutcome decide(std::span<const double> cosines, double threshold,
                    bool stem_is_zero, TieBreaker& ties) {
  GuessOutcome outcome;
  if (stem_is_zero) {
    outcome.skipped_zero_stem = true;
    return outcome;
  }
  TopTwo top = select_top_two(cosines, ties);
  const double m = top.margin();
  outcome.margin = m;
  if (threshold > m) return outcome;
  outcome.guesses.push_back(top.best);
  if (threshold < -m && top.second) outcome.guesses.push_back(*top.second);
  return outcome;
}

EvalReport evaluate(std::span<const std::size_t> answers,
                    std::span<const GuessOutcome> outcomes) {
  if (answers.size() != outcomes.size()) {
    throw std::invalid_argument("evaluate: one outcome per question required");
  }
  EvalReport r;
  r.total = answers.size();
  for (std::size_t i = 0; i < answers.size(); ++i) {
    const auto& g = outcomes[i].guesses;
    r.guesses_made += g.size();
    if (outcomes[i].skipped_zero_stem) ++r.zero_stem;
    if (g.size() > 1) ++r.doubles;
    if (g.empty()) {
      ++r.skipped;
    } else if (std::find(g.begin(), g.end(), answers[i]) != g.end()) {
      ++r.correct;
    } else {
      ++r.incorrect;
    }
  }
  r.precision = safe_ratio(static_cast<double>(r.correct),
                           static_cast<double>(r.guesses_made));
  r.recall =
      safe_ratio(static_cast<double>(r.correct), static_cast<double>(r.total));
  r.f = f_measure(r.precision, r.recall);
  return r;
}

EvalReport evaluate(std::span<const AnalogyQuestion> questions,
                    std::span<const GuessOutcome> outcomes) {
  std::vector<std::size_t> answers;
  answers.reserve(questions.size());
  for (const auto& q : questions) answers.push_back(q.answer);
  return evaluate(answers, outcomes);
}

double raw_sat_score(std::size_t correct, std::size_t incorrect) noexcept {
  return static_cast<double>(correct) - static_cast<double>(incorrect) / 4.0;
}

ScoredQuestion score_question(const RelationVector& stem,
                              std::span<const RelationVector> choices,
                              std::size_t answer) {
  return {score_choices(stem, choices), stem.is_zero(), answer};
}

std::vector<GuessOutcome> decide_all(std::span<const ScoredQuestion> questions,
                                     double threshold, TieBreakMode mode,
                                     std::uint64_t seed) {
  std::vector<GuessOutcome> outcomes;
  outcomes.reserve(questions.size());
  for (std::size_t i = 0; i < questions.size(); ++i) {
    TieBreaker ties(mode, ordinal_seed(seed, i));
    outcomes.push_back(decide(questions[i].cosines, threshold,
                              questions[i].stem_is_zero, ties));
  }
  return outcomes;
}

SweepRow to_sweep_row(double threshold, const EvalReport& report) {
  return {threshold,          report.precision,    report.recall, report.f,
          report.guesses_made, report.skipped, report.doubles};
}

std::vector<SweepRow> sweep_analogies(std::span<const ScoredQuestion> questions,
                                      std::span<const double> thresholds,
                                      TieBreakMode mode, std::uint64_t seed) {
  std::vector<std::size_t> answers;
  for (const auto& q : questions) answers.push_back(q.answer);
  std::vector<SweepRow> rows;
  for (double t : thresholds) {
    rows.push_back(
        to_sweep_row(t, evaluate(answers, decide_all(questions, t, mode, seed))));
  }
  return rows;
}

std::size_t PoolRanking::rank_of(std::size_t pool_index) const {
  auto it = std::find(order.begin(), order.end(), pool_index);
  if (it == order.end()) throw std::out_of_range("pool index not ranked");
  return static_cast<std::size_t>(it - order.begin()) + 1;
}

PoolRanking rank_pool(const RelationVector& stem,
                      std::span<const RelationVector> pool) {
  PoolRanking r;
  r.cosines = score_choices(stem, pool);
  r.order.resize(pool.size());
  std::iota(r.order.begin(), r.order.end(), std::size_t{0});
  std::stable_sort(r.order.begin(), r.order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return r.cosines[a] > r.cosines[b];
                   });
  return r;
}

std::vector<CumulativeRow> cumulative_top_k(std::span<const std::size_t> ranks,
                                            std::size_t max_k) {
  const double n = static_cast<double>(ranks.size());
  std::vector<CumulativeRow> rows;
  std::size_t cumulative = 0;
  for (std::size_t k = 1; k <= max_k; ++k) {
    auto matches = static_cast<std::size_t>(
        std::count(ranks.begin(), ranks.end(), k));
    cumulative += matches;
    rows.push_back({k, matches, safe_ratio(static_cast<double>(matches), n),
                    cumulative, safe_ratio(static_cast<double>(cumulative), n)});
  }
  return rows;
}

}  // namespace relsim
