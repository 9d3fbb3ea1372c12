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
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "test_support.hpp"

using namespace relsim;

namespace {

const std::vector<double> kTable8 = {0.31874, 0.57234, 0.68757, 0.49725, 0.69265};

GuessOutcome decide_at(std::span<const double> cosines, double t,
                       std::uint64_t seed = 0, bool zero = false) {
  TieBreaker ties(TieBreakMode::kRandom, seed);
  return decide(cosines, t, zero, ties);
}

std::vector<ScoredQuestion> random_questions(std::mt19937_64& rng, std::size_t n) {
  std::vector<ScoredQuestion> qs(n);
  for (auto& q : qs) {
    q.cosines.resize(5);
    for (auto& c : q.cosines) c = static_cast<double>(rng() % 1000) / 1000.0;
    if (rng() % 7 == 0) q.cosines[1] = q.cosines[3];  // exact tie
    q.stem_is_zero = rng() % 25 == 0;
    q.answer = rng() % 5;
  }
  return qs;
}

}  // namespace

TEST_CASE("margin policy on the five-choice example") {
  auto at_zero = decide_at(kTable8, 0.0);
  CHECK(at_zero.guesses == std::vector<std::size_t>{4});
  CHECK(std::abs(at_zero.margin - 0.00508) <= 1e-9);

  CHECK(decide_at(kTable8, 0.01).guesses.empty());
  CHECK(decide_at(kTable8, -0.01).guesses == std::vector<std::size_t>{4, 2});
  // Inside [-m, m] the single best guess stands.
  CHECK(decide_at(kTable8, 0.005).guesses == std::vector<std::size_t>{4});
  CHECK(decide_at(kTable8, -0.005).guesses == std::vector<std::size_t>{4});
}

TEST_CASE("zero stem vectors are skipped at every threshold") {
  for (double t : {-1.0, 0.0, 1.0}) {
    auto o = decide_at(kTable8, t, 0, true);
    CHECK(o.guesses.empty());
    CHECK(o.skipped_zero_stem);
  }
}

TEST_CASE("exact ties are broken by the seed") {
  std::vector<double> tied{0.5, 0.5};
  std::set<std::size_t> picks;
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    auto o = decide_at(tied, 0.0, seed);
    REQUIRE(o.guesses.size() == 1);
    CHECK(o.margin == 0.0);
    picks.insert(o.guesses[0]);
    CHECK(decide_at(tied, 0.0, seed).guesses == o.guesses);
  }
  CHECK(picks == std::set<std::size_t>{0, 1});

  TieBreaker first(TieBreakMode::kFirst, 123);
  CHECK(decide(tied, 0.0, false, first).guesses == std::vector<std::size_t>{0});
}

TEST_CASE("seed changes nothing without ties") {
  for (std::uint64_t seed = 0; seed < 32; ++seed) {
    CHECK(decide_at(kTable8, -0.01, seed).guesses == std::vector<std::size_t>{4, 2});
  }
}

TEST_CASE("score_choices") {
  auto stem = RelationVector::from_raw({"a", "b"}, {3, 0, 1, 0});
  auto same = RelationVector::from_raw({"c", "d"}, {3, 0, 1, 0});
  auto orth = RelationVector::from_raw({"e", "f"}, {0, 5, 0, 0});
  auto cos = score_choices(stem, std::vector{orth, same});
  CHECK(cos[0] == 0.0);
  CHECK(cos[1] == doctest::Approx(1.0));

  auto zero = RelationVector::from_raw({"g", "h"}, {0, 0, 0, 0});
  for (double c : score_choices(zero, std::vector{orth, same})) CHECK(c == 0.0);
}

TEST_CASE("evaluate reproduces the published counts") {
  std::vector<std::size_t> answers(374, 0);
  std::vector<GuessOutcome> outcomes(374);
  for (std::size_t i = 0; i < 176; ++i) outcomes[i].guesses = {0};
  for (std::size_t i = 176; i < 369; ++i) outcomes[i].guesses = {1};
  for (std::size_t i = 369; i < 374; ++i) outcomes[i].skipped_zero_stem = true;
  auto r = evaluate(answers, outcomes);
  CHECK(r.correct == 176);
  CHECK(r.incorrect == 193);
  CHECK(r.skipped == 5);
  CHECK(r.zero_stem == 5);
  CHECK(r.guesses_made == 369);
  CHECK(std::abs(100 * r.precision - 47.7) <= 0.05);
  CHECK(std::abs(100 * r.recall - 47.1) <= 0.05);
  CHECK(std::abs(100 * r.f - 47.4) <= 0.05);
  CHECK(raw_sat_score(r.correct, r.incorrect) == 127.75);
}

TEST_CASE("evaluate edge cases") {
  std::vector<std::size_t> answers{0, 1, 2};
  std::vector<GuessOutcome> skipped(3);
  auto none = evaluate(answers, skipped);
  CHECK(none.precision == 0.0);
  CHECK(none.recall == 0.0);
  CHECK(none.f == 0.0);

  std::vector<GuessOutcome> perfect(3);
  for (std::size_t i = 0; i < 3; ++i) perfect[i].guesses = {answers[i]};
  auto all = evaluate(answers, perfect);
  CHECK(all.precision == 1.0);
  CHECK(all.recall == 1.0);
  CHECK(all.f == 1.0);

  std::vector<GuessOutcome> doubled(1);
  doubled[0].guesses = {2, 0};
  auto d = evaluate(std::vector<std::size_t>{0}, doubled);
  CHECK(d.correct == 1);
  CHECK(d.doubles == 1);
  CHECK(d.guesses_made == 2);
  CHECK(d.precision == 0.5);
  CHECK(d.recall == 1.0);
}

TEST_CASE("raw SAT score") {
  CHECK(raw_sat_score(78, 0) == 78.0);
  CHECK(raw_sat_score(0, 0) == 0.0);
  CHECK(raw_sat_score(20, 80) == 0.0);
}

TEST_CASE("F lies between precision and recall") {
  std::mt19937_64 rng(4);
  auto qs = random_questions(rng, 200);
  std::vector<std::size_t> answers;
  for (const auto& q : qs) answers.push_back(q.answer);
  for (double t : ThresholdGrid{}.values()) {
    auto r = evaluate(answers, decide_all(qs, t, TieBreakMode::kRandom, 1));
    CHECK(r.f >= std::min(r.precision, r.recall) - 1e-15);
    CHECK(r.f <= std::max(r.precision, r.recall) + 1e-15);
    if (r.guesses_made == r.total) {
      CHECK(r.precision == r.recall);
      CHECK(r.f == doctest::Approx(r.precision));
    }
  }
}

TEST_CASE("guess sets nest as the threshold rises") {
  std::mt19937_64 rng(10);
  auto qs = random_questions(rng, 300);
  auto grid = ThresholdGrid{-0.2, 0.2, 0.01}.values();
  std::vector<std::vector<GuessOutcome>> by_t;
  for (double t : grid) by_t.push_back(decide_all(qs, t, TieBreakMode::kRandom, 77));
  for (std::size_t k = 1; k < grid.size(); ++k) {
    for (std::size_t q = 0; q < qs.size(); ++q) {
      const auto& lo = by_t[k - 1][q].guesses;
      const auto& hi = by_t[k][q].guesses;
      for (auto g : hi) CHECK(std::find(lo.begin(), lo.end(), g) != lo.end());
    }
  }
  for (std::size_t q = 0; q < qs.size(); ++q) {
    const auto zero_index = static_cast<std::size_t>(
        std::find(grid.begin(), grid.end(), 0.0) - grid.begin());
    REQUIRE(zero_index < grid.size());
    CHECK(by_t[zero_index][q].guesses.size() == (qs[q].stem_is_zero ? 0u : 1u));
    CHECK(by_t[zero_index][q].margin >= 0.0);
  }
}

TEST_CASE("rank_pool matches a full sort") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    auto random_vec = [&] {
      std::vector<std::uint64_t> raw(8);
      for (auto& c : raw) c = rng() % 4;
      return RelationVector::from_raw({"p", "q"}, raw);
    };
    auto stem = random_vec();
    std::vector<RelationVector> pool;
    for (int i = 0; i < 20; ++i) pool.push_back(random_vec());
    auto ranking = rank_pool(stem, pool);

    std::vector<std::pair<double, std::size_t>> oracle;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      oracle.push_back({-testing::oracle_cosine(stem.values, pool[i].values), i});
    }
    std::sort(oracle.begin(), oracle.end());
    REQUIRE(ranking.order.size() == pool.size());
    for (std::size_t k = 0; k < pool.size(); ++k) {
      CHECK(ranking.order[k] == oracle[k].second);
      if (k > 0) {
        CHECK(ranking.cosines[ranking.order[k - 1]] >= ranking.cosines[ranking.order[k]]);
      }
      CHECK(ranking.rank_of(ranking.order[k]) == k + 1);
    }
  }
}

TEST_CASE("rank_pool puts an exact copy first") {
  auto stem = RelationVector::from_raw({"a", "b"}, {1, 2, 0});
  auto other = RelationVector::from_raw({"c", "d"}, {0, 0, 9});
  auto r = rank_pool(stem, std::vector{other, stem});
  CHECK(r.order.front() == 1);
  CHECK(r.rank_of(1) == 1);
}

TEST_CASE("cumulative top-k") {
  std::vector<std::size_t> ranks{1, 1, 3};
  auto rows = cumulative_top_k(ranks, 10);
  REQUIRE(rows.size() == 10);
  CHECK(rows[0].matches == 2);
  CHECK(rows[0].cumulative == 2);
  CHECK(std::abs(100 * rows[0].cumulative_fraction - 66.7) < 0.05);
  CHECK(rows[1].cumulative == 2);
  CHECK(rows[2].cumulative == 3);
  CHECK(rows[2].cumulative_fraction == 1.0);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    CHECK(rows[k].cumulative >= rows[k - 1].cumulative);
  }

  std::vector<std::size_t> uniform(369);
  for (std::size_t i = 0; i < uniform.size(); ++i) uniform[i] = i + 1;
  auto flat = cumulative_top_k(uniform, 10);
  CHECK(flat[9].cumulative == 10);
  CHECK(std::abs(flat[9].cumulative_fraction - 0.027) < 0.0005);
}

TEST_CASE("question files") {
  std::istringstream good(
      "# comment\n"
      "traffic:street\tship:gangplank\tcrop:harvest\tcar:garage\tpedestrians:feet\twater:riverbed\te\n"
      "\n"
      "a:b\tc:d\te:f\tb\n");
  auto qs = read_questions(good);
  REQUIRE(qs.size() == 2);
  CHECK(qs[0].stem.key() == "traffic:street");
  CHECK(qs[0].choices.size() == 5);
  CHECK(qs[0].answer == 4);
  CHECK(qs[1].choices.size() == 2);
  CHECK(qs[1].answer == 1);

  std::istringstream bad_letter("a:b\tc:d\te:f\tz\n");
  CHECK_THROWS_WITH_AS(read_questions(bad_letter),
                       doctest::Contains("line 1"), InputError);
  std::istringstream bad_pair("# x\nab\tc:d\te:f\ta\n");
  CHECK_THROWS_WITH_AS(read_questions(bad_pair), doctest::Contains("line 2"),
                       InputError);
}
