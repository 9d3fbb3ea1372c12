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

#include "relsim/vector_cache.hpp"

#include <random>
#include <sstream>

#include "doctest.h"

using namespace relsim;

namespace {

const CacheProvenance kProv{"00000000000000aa", "00000000000000bb", "document"};

std::vector<std::uint64_t> random_counts(std::mt19937_64& rng) {
  std::vector<std::uint64_t> raw(128);
  for (auto& c : raw) c = rng() % 3 == 0 ? rng() : rng() % 1000;
  return raw;
}

}  // namespace

TEST_CASE("cache round trip is lossless") {
  std::mt19937_64 rng(1);
  VectorCache cache(kProv);
  for (int i = 0; i < 50; ++i) {
    cache.put({"w" + std::to_string(i), "v_" + std::to_string(i % 7)}, random_counts(rng));
  }
  std::stringstream buf;
  cache.write(buf);
  auto back = VectorCache::read(buf);
  CHECK(back.provenance() == kProv);
  CHECK(back.entries() == cache.entries());

  std::stringstream again;
  back.write(again);
  std::stringstream first;
  cache.write(first);
  CHECK(again.str() == first.str());
}

TEST_CASE("cache vectors use the log transform") {
  VectorCache cache(kProv);
  std::vector<std::uint64_t> raw(128, 0);
  raw[3] = 7;
  cache.put({"a", "b"}, raw);
  auto v = cache.vector({"a", "b"});
  CHECK(v.values[3] == doctest::Approx(std::log(8.0)));
  CHECK_THROWS_AS(cache.vector({"b", "a"}), InputError);
  CHECK_THROWS_AS(cache.put({"c", "d"}, std::vector<std::uint64_t>(127)),
                  std::invalid_argument);
}

TEST_CASE("provenance mismatch names both checksums") {
  VectorCache cache(kProv);
  CHECK_NOTHROW(cache.require_provenance(kProv));
  CHECK_NOTHROW(cache.require_provenance({"", kProv.terms, ""}));
  try {
    cache.require_provenance({"00000000000000cc", kProv.terms, "document"});
    FAIL("expected mismatch");
  } catch (const ProvenanceMismatch& e) {
    std::string what = e.what();
    CHECK(what.find("00000000000000aa") != std::string::npos);
    CHECK(what.find("00000000000000cc") != std::string::npos);
  }
  CHECK_THROWS_AS(cache.require_provenance({kProv.corpus, kProv.terms, "occurrence"}),
                  ProvenanceMismatch);
}

TEST_CASE("malformed cache files are rejected") {
  std::istringstream no_header("a:b\t1\n");
  CHECK_THROWS_AS(VectorCache::read(no_header), InputError);

  std::string head = "# relsim vector cache v1\n# corpus x\n# terms y\n# mode document\n";
  std::istringstream short_row(head + "a:b\t1\t2\n");
  CHECK_THROWS_WITH_AS(VectorCache::read(short_row), doctest::Contains("128"), InputError);

  std::string negative = head + "a:b";
  for (int i = 0; i < 128; ++i) negative += i == 5 ? "\t-1" : "\t0";
  std::istringstream neg(negative + "\n");
  CHECK_THROWS_AS(VectorCache::read(neg), InputError);
}
