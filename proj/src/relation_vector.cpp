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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "relsim/errors.hpp"
#include "relsim/phrase_query.hpp"
#include "relsim/stemmer.hpp"

namespace relsim {
namespace {

// Whitespace-separated units of a joining term.
std::vector<std::string> term_units(const std::string& term) {
  std::istringstream in(term);
  std::vector<std::string> units;
  for (std::string unit; in >> unit;) units.push_back(unit);
  return units;
}

std::string compose(const std::string& left, const std::vector<std::string>& mid,
                    const std::string& right) {
  std::string out = left;
  for (const auto& unit : mid) {
    out.push_back(' ');
    out += unit;
  }
  out.push_back(' ');
  out += right;
  return out;
}

}  // namespace

WordPair WordPair::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos ||
      text.find(':', colon + 1) != std::string_view::npos) {
    throw InputError("expected a word pair 'x:y', got '" + std::string(text) +
                     "'");
  }
  WordPair pair{std::string(text.substr(0, colon)),
                std::string(text.substr(colon + 1))};
  if (pair.x.empty() || pair.y.empty()) {
    throw InputError("empty member in word pair '" + std::string(text) + "'");
  }
  for (auto* member : {&pair.x, &pair.y}) {
    for (char& c : *member) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
  }
  return pair;
}

std::uint64_t IndexHitProvider::count(std::string_view phrase) const {
  return count_hits(*index_, parse_phrase(phrase), mode_).count;
}

RelationVector RelationVector::from_raw(WordPair pair,
                                        std::vector<std::uint64_t> raw) {
  RelationVector v;
  v.pair = std::move(pair);
  v.values = log_transform(raw);
  v.raw = std::move(raw);
  return v;
}

bool RelationVector::is_zero() const noexcept {
  return std::all_of(raw.begin(), raw.end(),
                     [](std::uint64_t c) { return c == 0; });
}

std::vector<double> log_transform(std::span<const std::uint64_t> raw,
                                  double base) {
  const double scale = base == std::numbers::e ? 1.0 : 1.0 / std::log(base);
  std::vector<double> out;
  out.reserve(raw.size());
  for (auto c : raw) {
    out.push_back(std::log1p(static_cast<double>(c)) * scale);
  }
  return out;
}

std::vector<std::string> generate_queries(const WordPair& pair,
                                          const JoiningTermTable& table) {
  const std::string x = stem_member(pair.x);
  const std::string y = stem_member(pair.y);
  std::vector<std::string> queries;
  queries.reserve(2 * table.size());
  for (const auto& term : table.terms()) {
    auto units = term_units(term);
    queries.push_back(compose(x, units, y));
    queries.push_back(compose(y, units, x));
  }
  return queries;
}

RelationVector build_vector(const HitCountProvider& provider,
                            const WordPair& pair,
                            const JoiningTermTable& table) {
  auto queries = generate_queries(pair, table);
  std::vector<std::uint64_t> raw;
  raw.reserve(queries.size());
  for (auto& q : queries) {
    try {
      raw.push_back(provider.count(q));
    } catch (const std::exception& e) {
      throw ProviderError(std::move(q), e.what());
    }
  }
  return RelationVector::from_raw(pair, std::move(raw));
}

double cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("cosine of vectors with lengths " +
                                std::to_string(a.size()) + " and " +
                                std::to_string(b.size()));
  }
  double dot = 0, aa = 0, bb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    aa += a[i] * a[i];
    bb += b[i] * b[i];
  }
  if (aa == 0 || bb == 0) return 0;
  return std::clamp(dot / (std::sqrt(aa) * std::sqrt(bb)), -1.0, 1.0);
}

double cosine(const RelationVector& a, const RelationVector& b) {
  return cosine(a.values, b.values);
}

}  // namespace relsim
