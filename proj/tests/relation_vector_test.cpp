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

#include "relsim/relation_vector.hpp"

#include <cmath>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "relsim/corpus.hpp"
#include "relsim/stemmer.hpp"

using namespace relsim;

namespace {

std::string random_letters(std::mt19937_64& rng, std::size_t len) {
  std::string w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<char>('a' + rng() % 26));
  return w;
}

class TableProvider : public HitCountProvider {
 public:
  explicit TableProvider(std::map<std::string, std::uint64_t> counts)
      : counts_(std::move(counts)) {}
  std::uint64_t count(std::string_view phrase) const override {
    auto it = counts_.find(std::string(phrase));
    return it == counts_.end() ? 0 : it->second;
  }

 private:
  std::map<std::string, std::uint64_t> counts_;
};

class FailingProvider : public HitCountProvider {
 public:
  std::uint64_t count(std::string_view phrase) const override {
    if (phrase.find(" of ") != std::string_view::npos) {
      throw std::runtime_error("backend unavailable");
    }
    return 1;
  }
};

}  // namespace

TEST_CASE("stemming examples") {
  CHECK(stem("advertisement") == "advertise*");
  CHECK(stem("compliance") == "complia*");
  CHECK(stem("rhythm") == "rhythm*");
  CHECK(stem("up") == "up");
  CHECK(stem("restrained") == "restrai*");
  CHECK(stem("limit") == "limit*");
}

TEST_CASE("stemming follows the length bands") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 5000; ++i) {
    auto w = random_letters(rng, 1 + rng() % 20);
    auto s = stem(w);
    const auto n = w.size();
    if (n > 10) {
      CHECK(s == w.substr(0, n - 4) + "*");
    } else if (n > 8) {
      CHECK(s == w.substr(0, n - 3) + "*");
    } else if (n > 2) {
      CHECK(s == w + "*");
    } else {
      CHECK(s == w);
    }
  }
}

TEST_CASE("words without three leading letters are not wildcarded") {
  CHECK(stem("2003") == "2003");
  CHECK(stem("a1234567890") == "a1234567890");
}

TEST_CASE("multiword members stem their final token only") {
  CHECK(stem_member("shoot_down") == "shoot down*");
  CHECK(stem_member("six-hour") == "six hour*");
  CHECK_THROWS_AS(stem_member("__"), InputError);
}

TEST_CASE("default joining-term table") {
  const auto& t = JoiningTermTable::standard();
  REQUIRE(t.size() == 64);
  CHECK(t.terms()[0] == " ");
  CHECK(t.terms()[1] == " * not ");
  CHECK(t.terms()[2] == " * very ");
  CHECK(t.terms()[16] == " get* ");
  CHECK(t.terms()[37] == " of ");
  CHECK(t.terms()[62] == "s ");
  CHECK(t.terms()[63] == "s * ");
  std::set<std::string> distinct(t.terms().begin(), t.terms().end());
  CHECK(distinct.size() == 64);
}

TEST_CASE("joining-term tables from files") {
  std::string text = "# custom\n";
  for (int i = 0; i < 64; ++i) text += "\" t" + std::to_string(i) + " \"\n";
  std::istringstream in(text);
  auto t = JoiningTermTable::read(in);
  CHECK(t.terms()[5] == " t5 ");
  CHECK(t.checksum() != JoiningTermTable::standard().checksum());

  std::istringstream short_table("\" of \"\n");
  CHECK_THROWS_AS(JoiningTermTable::read(short_table), InputError);
  std::istringstream unquoted("of\n");
  CHECK_THROWS_AS(JoiningTermTable::read(unquoted), InputError);
}

TEST_CASE("query generation") {
  auto q = generate_queries({"restrained", "limit"});
  REQUIRE(q.size() == 128);
  CHECK(q[4] == "restrai* * very limit*");
  CHECK(q[5] == "limit* * very restrai*");
  CHECK(q[0] == "restrai* limit*");
  CHECK(q[124] == "restrai* s limit*");
  CHECK(q[126] == "restrai* s * limit*");
  CHECK(q[127] == "limit* s * restrai*");

  auto up = generate_queries({"up", "to"});
  CHECK(up[0] == "up to");
  CHECK(up[1] == "to up");
}

TEST_CASE("every generated query parses") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    WordPair p{random_letters(rng, 1 + rng() % 14), random_letters(rng, 1 + rng() % 14)};
    if (i % 10 == 0) p.x += "_" + random_letters(rng, 1 + rng() % 6);
    for (const auto& q : generate_queries(p)) {
      CHECK_NOTHROW(parse_phrase(q));
    }
  }
}

TEST_CASE("build_vector applies log(x + 1)") {
  WordPair pair{"traffic", "street"};
  auto queries = generate_queries(pair);
  TableProvider provider({{queries[0], 544}, {queries[1], 460}, {queries[2], 7},
                          {queries[3], 15}});
  auto v = build_vector(provider, pair);
  REQUIRE(v.values.size() == 128);
  CHECK(v.raw[0] == 544);
  CHECK(v.values[0] == doctest::Approx(std::log(545.0)).epsilon(1e-15));
  CHECK(v.values[1] == doctest::Approx(std::log(461.0)).epsilon(1e-15));
  CHECK(v.values[2] == doctest::Approx(std::log(8.0)).epsilon(1e-15));
  CHECK(v.values[3] == doctest::Approx(std::log(16.0)).epsilon(1e-15));
  for (std::size_t i = 4; i < 128; ++i) CHECK(v.values[i] == 0.0);
  CHECK_FALSE(v.is_zero());
}

TEST_CASE("zero counts give the zero vector and e - 1 gives one") {
  auto zero = RelationVector::from_raw({"a", "b"}, std::vector<std::uint64_t>(128, 0));
  CHECK(zero.is_zero());
  for (double x : zero.values) CHECK(x == 0.0);
  // ln(x + 1) = 1 at x = e - 1; checked on the transform itself.
  CHECK(std::log1p(std::exp(1.0) - 1.0) == doctest::Approx(1.0));
}

TEST_CASE("provider failures carry the failing query") {
  FailingProvider provider;
  try {
    build_vector(provider, {"cat", "dog"});
    FAIL("expected ProviderError");
  } catch (const ProviderError& e) {
    CHECK(e.query() == "cat* instead of dog*");
    CHECK(std::string(e.what()).find("backend unavailable") != std::string::npos);
  }
}

TEST_CASE("cosine basics") {
  std::vector<double> a{1, 2}, b{2, 1}, x{1, 0}, y{0, 1}, z{0, 0};
  CHECK(cosine(a, b) == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(cosine(x, y) == 0.0);
  CHECK(cosine(a, a) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cosine(a, z) == 0.0);
  CHECK(cosine(z, z) == 0.0);
  std::vector<double> three{1, 2, 3};
  CHECK_THROWS_AS(cosine(a, three), std::invalid_argument);
}

TEST_CASE("cosine symmetry, scale invariance and range") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0, 5);
  for (int i = 0; i < 500; ++i) {
    std::vector<double> a(16), b(16);
    for (auto& v : a) v = rng() % 3 == 0 ? 0 : u(rng);
    for (auto& v : b) v = rng() % 3 == 0 ? 0 : u(rng);
    double c = cosine(a, b);
    CHECK(c == cosine(b, a));
    CHECK(c >= 0.0);
    CHECK(c <= 1.0);
    std::vector<double> scaled = a;
    double k = 0.1 + u(rng);
    for (auto& v : scaled) v *= k;
    if (cosine(a, a) != 0) CHECK(cosine(a, scaled) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("log base does not change cosines") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    std::vector<std::uint64_t> r1(128), r2(128);
    for (auto& c : r1) c = rng() % 4 == 0 ? rng() % 100000 : 0;
    for (auto& c : r2) c = rng() % 4 == 0 ? rng() % 100000 : 0;
    double natural = cosine(log_transform(r1), log_transform(r2));
    for (double base : {2.0, 10.0, 7.5}) {
      double other = cosine(log_transform(r1, base), log_transform(r2, base));
      CHECK(std::abs(natural - other) <= 1e-12);
    }
  }
}

TEST_CASE("reversing a pair swaps adjacent vector elements") {
  auto index = build_index(load_corpus(RELSIM_TEST_DATA_DIR "/planted_corpus.txt"));
  IndexHitProvider provider(index, HitMode::kDocumentHits);
  for (const auto& text : {"alpha:beta", "gamma:delta", "upsilon:lambda", "ut:sed"}) {
    auto pair = WordPair::parse(text);
    auto forward = build_vector(provider, pair);
    auto backward = build_vector(provider, pair.reversed());
    bool nonzero = false;
    for (std::size_t j = 0; j < 64; ++j) {
      CHECK(backward.raw[2 * j] == forward.raw[2 * j + 1]);
      CHECK(backward.raw[2 * j + 1] == forward.raw[2 * j]);
      nonzero = nonzero || forward.raw[2 * j] > 0;
    }
    CHECK(nonzero);
  }
}

TEST_CASE("word pair parsing") {
  auto p = WordPair::parse("Shoot_Down:Plane");
  CHECK(p.x == "shoot_down");
  CHECK(p.y == "plane");
  CHECK(p.key() == "shoot_down:plane");
  CHECK_THROWS_AS(WordPair::parse("nocolon"), InputError);
  CHECK_THROWS_AS(WordPair::parse("a:b:c"), InputError);
  CHECK_THROWS_AS(WordPair::parse(":b"), InputError);
}
