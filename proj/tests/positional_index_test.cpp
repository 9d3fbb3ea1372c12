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

#include "relsim/positional_index.hpp"

#include <random>
#include <sstream>

#include "doctest.h"
#include "test_support.hpp"

using namespace relsim;

namespace {

std::vector<Document> to_documents(const std::vector<std::vector<std::string>>& docs) {
  std::vector<Document> out;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    out.push_back({static_cast<DocId>(i), docs[i]});
  }
  return out;
}

std::uint64_t hits(const PositionalIndex& index, const std::string& q,
                   HitMode mode = HitMode::kDocumentHits) {
  return count_hits(index, parse_phrase(q), mode).count;
}

}  // namespace

TEST_CASE("single document vocabulary") {
  auto index = build_index(to_documents({{"the", "cat", "sat"}}));
  CHECK(index.doc_count() == 1);
  CHECK(index.vocabulary_size() == 3);
  CHECK(index.postings("the").size() == 1);
  CHECK(index.postings("the")[0] == Posting{0, 0});
  CHECK(index.postings("cat")[0] == Posting{0, 1});
  CHECK(index.postings("sat")[0] == Posting{0, 2});
  CHECK(index.postings("dog").empty());
}

TEST_CASE("empty corpus") {
  auto index = build_index({});
  CHECK(index.doc_count() == 0);
  CHECK(index.vocabulary_size() == 0);
  CHECK(hits(index, "a b") == 0);
}

TEST_CASE("shared token lists both documents") {
  auto index = build_index(to_documents({{"crude", "oil"}, {"oil", "well"}}));
  auto list = index.postings("oil");
  REQUIRE(list.size() == 2);
  CHECK(list[0] == Posting{0, 1});
  CHECK(list[1] == Posting{1, 0});
}

TEST_CASE("duplicate doc ids are rejected") {
  std::vector<Document> docs = {{7, {"a"}}, {3, {"b"}}, {7, {"c"}}};
  CHECK_THROWS_AS(build_index(docs), DuplicateDocumentError);
  try {
    build_index(docs);
  } catch (const DuplicateDocumentError& e) {
    CHECK(e.doc_id() == 7);
  }
}

TEST_CASE("invalid tokens are rejected") {
  std::vector<Document> docs = {{0, {"Cat"}}};
  CHECK_THROWS_AS(build_index(docs), InputError);
  docs = {{0, {""}}};
  CHECK_THROWS_AS(build_index(docs), InputError);
}

TEST_CASE("count_hits examples") {
  auto index = build_index(to_documents({{"the", "cat", "sat", "on", "the", "mat"}}));
  CHECK(hits(index, "the * sat") == 1);
  CHECK(hits(index, "cat on") == 0);
  CHECK(hits(index, "the", HitMode::kOccurrences) == 2);

  auto abab = build_index(to_documents({{"a", "b", "a", "b"}}));
  CHECK(hits(abab, "a b", HitMode::kOccurrences) == 2);
  CHECK(hits(abab, "a b", HitMode::kDocumentHits) == 1);
}

TEST_CASE("phrases never span documents") {
  auto index = build_index(to_documents({{"x", "alpha"}, {"beta", "y"}}));
  CHECK(hits(index, "alpha beta") == 0);
  CHECK(hits(index, "x * beta") == 0);
}

TEST_CASE("overlapping matches each count once per start") {
  auto index = build_index(to_documents({{"a", "a", "a", "a"}}));
  CHECK(hits(index, "a a", HitMode::kOccurrences) == 3);
  CHECK(hits(index, "a * a", HitMode::kOccurrences) == 2);
}

TEST_CASE("substring wildcards expand over the vocabulary") {
  auto index = build_index(to_documents(
      {{"restrained", "and", "very", "limited"},
       {"restraints", "are", "very", "limiting"},
       {"restrainabilities", "are", "very", "limits"}}));
  CHECK(hits(index, "restrai* * very limit*") == 2);
  CHECK(hits(index, "limit* * very restrai*") == 0);
}

TEST_CASE("count_hits agrees with a brute-force scan on random corpora") {
  std::mt19937_64 rng(2024);
  int mismatches = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto docs = testing::random_corpus(rng);
    auto index = build_index(to_documents(docs));
    for (int k = 0; k < 5; ++k) {
      auto q = testing::random_query(rng);
      auto expected = testing::brute_force_count(docs, q);
      auto doc_hits = hits(index, q, HitMode::kDocumentHits);
      auto occ = hits(index, q, HitMode::kOccurrences);
      if (doc_hits != expected.documents || occ != expected.occurrences) {
        ++mismatches;
        MESSAGE("query '" << q << "' trial " << trial);
      }
      CHECK(doc_hits <= occ);
      CHECK(doc_hits <= index.doc_count());
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("postings are sorted, unique and in range") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto docs = testing::random_corpus(rng);
    auto index = build_index(to_documents(docs));
    for (const auto& term : index.terms()) {
      auto list = index.postings(term);
      for (std::size_t i = 0; i < list.size(); ++i) {
        if (i > 0) CHECK(list[i - 1] < list[i]);
        REQUIRE(list[i].doc < docs.size());
        REQUIRE(list[i].position < docs[list[i].doc].size());
        CHECK(docs[list[i].doc][list[i].position] == term);
      }
    }
  }
}

TEST_CASE("rebuild and save/load give an identical index") {
  std::mt19937_64 rng(99);
  auto docs = to_documents(testing::random_corpus(rng));
  auto a = build_index(docs);
  auto b = build_index(docs);
  CHECK(a == b);

  std::stringstream first, second;
  a.save(first);
  b.save(second);
  CHECK(first.str() == second.str());

  auto loaded = PositionalIndex::load(first);
  CHECK(loaded == a);
}

TEST_CASE("load rejects garbage") {
  std::istringstream junk("definitely not an index");
  CHECK_THROWS_AS(PositionalIndex::load(junk), InputError);

  std::stringstream good;
  build_index(to_documents({{"a", "b"}})).save(good);
  std::string bytes = good.str();
  std::istringstream truncated(bytes.substr(0, bytes.size() - 3));
  CHECK_THROWS_AS(PositionalIndex::load(truncated), InputError);
}

TEST_CASE("hit mode names") {
  CHECK(parse_hit_mode("document") == HitMode::kDocumentHits);
  CHECK(parse_hit_mode("occurrence") == HitMode::kOccurrences);
  CHECK_THROWS_AS(parse_hit_mode("docs"), InputError);
}
